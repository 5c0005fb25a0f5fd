#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "boolten/decomposition.hpp"
#include "boolten/error.hpp"

namespace boolten {
namespace {

using Mask = std::uint64_t;
constexpr std::size_t kHardLimit = 16;

struct Rectangle {
  Mask rows;
  Mask cols;
};

// Unique nonzero entries of `masks`; map[k] is the slot of masks[k] or -1.
std::vector<Mask> dedupe(const std::vector<Mask>& masks, std::vector<int>& map) {
  std::vector<Mask> unique;
  map.assign(masks.size(), -1);
  for (std::size_t k = 0; k < masks.size(); ++k) {
    if (masks[k] == 0) continue;
    auto it = std::find(unique.begin(), unique.end(), masks[k]);
    map[k] = static_cast<int>(it - unique.begin());
    if (it == unique.end()) unique.push_back(masks[k]);
  }
  return unique;
}

std::vector<Mask> transpose_masks(const std::vector<Mask>& rows,
                                  std::size_t ncols) {
  std::vector<Mask> cols(ncols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      if ((rows[r] >> c) & 1U) cols[c] |= Mask{1} << r;
    }
  }
  return cols;
}

class CoverSearch {
 public:
  explicit CoverSearch(std::vector<Mask> rows, std::size_t ncols)
      : rows_(std::move(rows)), ncols_(ncols) {
    // Maximal all-ones rectangles: closed column sets with nonempty extent.
    for (Mask c = 1; c < (Mask{1} << ncols_); ++c) {
      Mask ext = 0;
      Mask intent = ~Mask{0};
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if ((rows_[r] & c) == c) {
          ext |= Mask{1} << r;
          intent &= rows_[r];
        }
      }
      if (ext != 0 && intent == c) rects_.push_back({ext, c});
    }
  }

  std::vector<Rectangle> solve() {
    const std::size_t upper = std::min(rows_.size(), ncols_);
    for (std::size_t k = lower_bound(rows_); k <= upper; ++k) {
      chosen_.clear();
      if (dfs(rows_, k)) return chosen_;
    }
    throw Error(ErrorKind::internal, "rectangle cover search failed");
  }

 private:
  // Greedy fooling set: no two of its cells fit in one all-ones rectangle.
  std::size_t lower_bound(const std::vector<Mask>& open) const {
    std::vector<std::pair<std::size_t, std::size_t>> picked;
    for (std::size_t i = 0; i < open.size(); ++i) {
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!((open[i] >> j) & 1U)) continue;
        bool independent = true;
        for (auto [k, l] : picked) {
          if (((rows_[i] >> l) & 1U) && ((rows_[k] >> j) & 1U)) {
            independent = false;
            break;
          }
        }
        if (independent) picked.emplace_back(i, j);
      }
    }
    return picked.size();
  }

  bool dfs(const std::vector<Mask>& open, std::size_t budget) {
    std::size_t best_i = 0, best_j = 0, best_count = SIZE_MAX;
    bool any = false;
    for (std::size_t i = 0; i < open.size(); ++i) {
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!((open[i] >> j) & 1U)) continue;
        any = true;
        std::size_t count = 0;
        for (const auto& rect : rects_) {
          count += ((rect.rows >> i) & 1U) && ((rect.cols >> j) & 1U);
        }
        if (count < best_count) {
          best_count = count;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (!any) return true;
    if (budget == 0 || lower_bound(open) > budget) return false;

    // Candidates through the chosen cell, reduced to the open cells they
    // would cover. A candidate whose open cells are a subset of another's
    // is dominated and skipped.
    std::vector<std::vector<Mask>> gains;
    std::vector<std::size_t> areas, ids;
    for (std::size_t id = 0; id < rects_.size(); ++id) {
      const Rectangle& rect = rects_[id];
      if (!((rect.rows >> best_i) & 1U) || !((rect.cols >> best_j) & 1U)) {
        continue;
      }
      ids.push_back(id);
      std::vector<Mask> gain(open.size(), 0);
      std::size_t area = 0;
      for (std::size_t r = 0; r < open.size(); ++r) {
        if ((rect.rows >> r) & 1U) gain[r] = open[r] & rect.cols;
        area += std::popcount(gain[r]);
      }
      gains.push_back(std::move(gain));
      areas.push_back(area);
    }
    auto subset = [](const std::vector<Mask>& x, const std::vector<Mask>& y) {
      for (std::size_t r = 0; r < x.size(); ++r) {
        if ((x[r] & ~y[r]) != 0) return false;
      }
      return true;
    };
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < gains.size(); ++k) {
      bool dominated = false;
      for (std::size_t l = 0; l < gains.size() && !dominated; ++l) {
        if (l == k || !subset(gains[k], gains[l])) continue;
        // Equal gains: keep the first.
        dominated = areas[l] > areas[k] || l < k;
      }
      if (!dominated) order.push_back(k);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return areas[x] > areas[y];
    });

    // Area bound: no rectangle covers more open cells than the best one.
    std::size_t open_cells = 0;
    for (Mask m : open) open_cells += std::popcount(m);
    std::size_t widest = 0;
    for (const auto& rect : rects_) {
      std::size_t area = 0;
      for (std::size_t r = 0; r < open.size(); ++r) {
        if ((rect.rows >> r) & 1U) area += std::popcount(open[r] & rect.cols);
      }
      widest = std::max(widest, area);
    }
    if (widest * budget < open_cells) return false;

    for (std::size_t k : order) {
      std::vector<Mask> next = open;
      for (std::size_t r = 0; r < next.size(); ++r) next[r] &= ~gains[k][r];
      chosen_.push_back(rects_[ids[k]]);
      if (dfs(next, budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Mask> rows_;
  std::size_t ncols_;
  std::vector<Rectangle> rects_;
  std::vector<Rectangle> chosen_;
};

}  // namespace

RankCertificate boolean_rank(const Tensor& a, const RankOptions& options) {
  if (options.max_rows > kHardLimit || options.max_cols > kHardLimit) {
    throw Error(ErrorKind::invalid_argument,
                "rank caps above " + std::to_string(kHardLimit) +
                    " are not supported");
  }
  if (a.rows() > options.max_rows || a.cols() > options.max_cols) {
    throw Error(ErrorKind::resource,
                "boolean rank is capped at " +
                    std::to_string(options.max_rows) + "x" +
                    std::to_string(options.max_cols) + ", got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (a.is_zero()) return {};

  std::vector<Mask> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = a.row(r)[0];

  std::vector<int> row_map, col_map;
  const std::vector<Mask> urows = dedupe(rows, row_map);
  const std::vector<Mask> ucols =
      dedupe(transpose_masks(urows, a.cols()), col_map);
  const std::vector<Mask> reduced = transpose_masks(ucols, urows.size());

  const std::vector<Rectangle> cover = CoverSearch(reduced, ucols.size()).solve();
  const std::size_t rank = cover.size();

  Factorization f{Tensor(Shape(a.shape().row_dims(), {rank})),
                  Tensor(Shape({rank}, a.shape().col_dims()))};
  for (std::size_t t = 0; t < rank; ++t) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (row_map[r] >= 0 && ((cover[t].rows >> row_map[r]) & 1U)) {
        f.left.set(r, t);
      }
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (col_map[c] >= 0 && ((cover[t].cols >> col_map[c]) & 1U)) {
        f.right.set(t, c);
      }
    }
  }
  if (f.left * f.right != a) {
    throw Error(ErrorKind::internal, "rank witness does not reproduce input");
  }
  return {rank, std::move(f)};
}

}  // namespace boolten
