#include <algorithm>
#include <cmath>
#include <limits>


#include "internal.hpp"
#include "lex2vec/error.hpp"

namespace lex2vec {

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void merge(const Range& o) {
    lo = std::min(lo, o.lo);
    hi = std::max(hi, o.hi);
  }
};

// Monotone in v; maps lo to exactly 0 and hi to exactly 1.
inline double scale(double v, const Range& r) {
  if (r.hi == r.lo) return 0.5;
  double span = r.hi - r.lo;
  if (std::isfinite(span)) return (v - r.lo) / span;
  // hi - lo overflowed; halve everything first.
  return (v / 2 - r.lo / 2) / (r.hi / 2 - r.lo / 2);
}

void require_finite(const EmbeddingTable& table) {
  const auto values = table.values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      const std::size_t word = k / table.dim_count();
      throw Error(ErrorKind::NonFiniteValue,
                  "non-finite value for word '" + table.vocabulary()[word] + "' at dimension " +
                      std::to_string(k % table.dim_count()));
    }
  }
}

NormalizedEmbeddingTable wrap(const EmbeddingTable& table, std::vector<double> out) {
  return make_normalized_unchecked(EmbeddingTable(table.vocabulary(), std::move(out), table.dim_count()));
}

}  // namespace

NormalizedEmbeddingTable normalize(const EmbeddingTable& table, NormalizationScope scope) {
  require_finite(table);
  const auto in = table.values();
  const auto rows = static_cast<std::ptrdiff_t>(table.size());
  const std::size_t dims = table.dim_count();
  std::vector<double> out(in.size());

  switch (scope) {
    case NormalizationScope::PerDimension: {
      std::vector<Range> ranges(dims);
#pragma omp parallel
      {
        std::vector<Range> local(dims);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
          const double* row = in.data() + i * dims;
          for (std::size_t j = 0; j < dims; ++j) local[j].add(row[j]);
        }
#pragma omp critical(lex2vec_normalize_merge)
        for (std::size_t j = 0; j < dims; ++j) ranges[j].merge(local[j]);
      }
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < dims; ++j) {
          out[i * dims + j] = scale(in[i * dims + j], ranges[j]);
        }
      }
      break;
    }
    case NormalizationScope::PerRow: {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < rows; ++i) {
        Range r;
        for (std::size_t j = 0; j < dims; ++j) r.add(in[i * dims + j]);
        for (std::size_t j = 0; j < dims; ++j) out[i * dims + j] = scale(in[i * dims + j], r);
      }
      break;
    }
    case NormalizationScope::Global: {
      const auto n = static_cast<std::ptrdiff_t>(in.size());
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) schedule(static)
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        lo = std::min(lo, in[k]);
        hi = std::max(hi, in[k]);
      }
      const Range r{lo, hi};
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = scale(in[k], r);
      break;
    }
  }
  return wrap(table, std::move(out));
}

namespace serial {

NormalizedEmbeddingTable normalize(const EmbeddingTable& table, NormalizationScope scope) {
  require_finite(table);
  const std::size_t rows = table.size();
  const std::size_t dims = table.dim_count();
  std::vector<double> out(rows * dims);

  switch (scope) {
    case NormalizationScope::PerDimension:
      for (std::size_t j = 0; j < dims; ++j) {
        Range r;
        for (std::size_t i = 0; i < rows; ++i) r.add(table.at(i, j));
        for (std::size_t i = 0; i < rows; ++i) out[i * dims + j] = scale(table.at(i, j), r);
      }
      break;
    case NormalizationScope::PerRow:
      for (std::size_t i = 0; i < rows; ++i) {
        Range r;
        for (double v : table.row(i)) r.add(v);
        for (std::size_t j = 0; j < dims; ++j) out[i * dims + j] = scale(table.at(i, j), r);
      }
      break;
    case NormalizationScope::Global: {
      Range r;
      for (double v : table.values()) r.add(v);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = scale(table.values()[k], r);
      break;
    }
  }
  return wrap(table, std::move(out));
}

}  // namespace serial
}  // namespace lex2vec
