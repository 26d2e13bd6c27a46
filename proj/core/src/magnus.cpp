#include "zlab/magnus.hpp"

namespace zlab {

TruncatedSeries magnus(const GroupWord& g, std::uint32_t modulus, std::uint32_t alphabet,
                       std::uint32_t degree_bound) {
  if (g.min_alphabet() > alphabet)
    throw parameter_error("magnus: generator index out of range");
  TruncatedSeries r = TruncatedSeries::one(modulus, alphabet, degree_bound);
  for (const auto& s : g.syllables()) {
    TruncatedSeries base =
        TruncatedSeries::generator_unit(modulus, alphabet, degree_bound, s.gen);
    r = r * base.pow(s.exp);
  }
  return r;
}

std::uint32_t epsilon(const Word& w, const GroupWord& g, std::uint32_t modulus,
                      std::uint32_t alphabet) {
  std::uint32_t kw = 0;
  for (std::uint8_t a : w) kw = std::max<std::uint32_t>(kw, a + 1u);
  std::uint32_t k = std::max<std::uint32_t>({alphabet, g.min_alphabet(), kw, 1u});
  return magnus(g, modulus, k, static_cast<std::uint32_t>(w.size())).coeff(w);
}

}  // namespace zlab
