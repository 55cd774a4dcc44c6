#include "fourgeo/kernels/ledger.hpp"

namespace fourgeo::kernels {

std::vector<LaurentPoly> surgery_ledgers_serial(const LaurentPoly& base,
                                                std::span<const LaurentPoly> alexanders) {
  std::vector<LaurentPoly> out;
  out.reserve(alexanders.size());
  for (const auto& a : alexanders) out.push_back(base * a.substitute_square());
  return out;
}

std::vector<LaurentPoly> surgery_ledgers(const LaurentPoly& base,
                                         std::span<const LaurentPoly> alexanders) {
  std::vector<LaurentPoly> out(alexanders.size());
  const auto count = static_cast<long>(alexanders.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = base * alexanders[k].substitute_square();
  }
  return out;
}

std::size_t count_collisions_serial(std::span<const LaurentPoly> values) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) ++hits;
  return hits;
}

std::size_t count_collisions(std::span<const LaurentPoly> values) {
  std::size_t hits = 0;
  const auto count = static_cast<long>(values.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
  for (long i = 0; i < count; ++i) {
    const auto a = static_cast<std::size_t>(i);
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if (values[a] == values[b]) ++hits;
  }
  return hits;
}

}  // namespace fourgeo::kernels
