#include "hk/gallery.hpp"

#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "hk/compactify.hpp"
#include "hk/errors.hpp"

namespace hk::gallery {

StepFn<Rat> typewriter(int n) {
  if (n < 1) throw Error("typewriter index starts at 1");
  const int k = std::bit_width(static_cast<unsigned>(n)) - 1;
  const long block = 1L << k;
  const long j = n - block;
  return StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(j, block), Rat(j + 1, block));
}

StepFn<Rat> heaviside_trunc(int n, const Rat& L) {
  if (n < 1) throw Error("tail index starts at 1");
  if (!(Rat(0) < L)) throw Error("truncation must be positive");
  if (!(Rat(n) < L)) return StepFn<Rat>::zero(Rat(0), L);
  return StepFn<Rat>::indicator(Rat(0), L, Rat(n), L);
}

StepFn<Rat> heaviside_compact(int n) {
  if (n < 1) throw Error("tail index starts at 1");
  return StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(0), Rat(1, n));
}

StepFn<Rat> alternating(int n) {
  if (n < 1) throw Error("alternating index starts at 1");
  return StepFn<Rat>::constant(Rat(0), Rat(1), n % 2 == 0 ? Rat(1) : Rat(-1));
}

StepFn<Rat> random_step(std::uint64_t seed, int m_max, long v_max, const Rat& a, const Rat& b) {
  if (m_max < 1) throw Error("need at least one piece");
  if (!(a < b)) throw Error("base endpoints out of order");
  std::mt19937_64 rng(seed);
  const int m = 1 + int(rng() % std::uint64_t(m_max));
  constexpr long kGrid = 2520;  // divisible by 2..10, so cuts land on varied denominators
  std::set<long> cuts;
  while (int(cuts.size()) < m - 1) cuts.insert(1 + long(rng() % (kGrid - 1)));
  const Rat span = b - a;
  std::vector<Rat> breaks{a};
  for (long c : cuts) breaks.push_back(a + span * Rat(c, kGrid));
  breaks.push_back(b);
  auto draw_value = [&]() {
    const long lim = 16 * v_max;
    return Rat(long(rng() % std::uint64_t(2 * lim + 1)) - lim, 16);
  };
  std::vector<Rat> values;
  values.reserve(std::size_t(m));
  for (int i = 0; i < m; ++i) values.push_back(draw_value());
  Rat at_lo = draw_value();
  return StepFn<Rat>(std::move(breaks), std::move(values), std::move(at_lo)).canonical();
}

FunctionSequence<Rat> typewriter_seq() {
  return {"typewriter",
          [](int n) { return typewriter(n); },
          Interval<Rat>::closed(Rat(0), Rat(1)),
          StepFn<Rat>::zero(Rat(0), Rat(1)),
          false};
}

FunctionSequence<Rat> heaviside_compact_seq() {
  return {"heaviside",
          [](int n) { return heaviside_compact(n); },
          Interval<Rat>::left_open(Rat(0), Rat(1)),
          StepFn<Rat>::zero(Rat(0), Rat(1)),
          true};
}

FunctionSequence<Rat> alternating_seq() {
  return {"alternating",
          [](int n) { return alternating(n); },
          Interval<Rat>::closed(Rat(0), Rat(1)),
          alternating(1),
          false};
}

FunctionSequence<Rat> random_seq(std::uint64_t seed) {
  return {"random",
          [seed](int n) {
            return random_step(seed + std::uint64_t(n) * 1000003ULL, 12, 4, Rat(0), Rat(1));
          },
          Interval<Rat>::closed(Rat(0), Rat(1)),
          StepFn<Rat>::zero(Rat(0), Rat(1)),
          false};
}

FamilyMember chi_member() {
  StepFn<Rat> s = StepFn<Rat>::constant(Rat(0), Rat(1), Rat(1));
  HKFn<double> flt{to_float(s)};
  return {"chi", std::move(s), std::move(flt)};
}

FamilyMember two_piece_member() {
  StepFn<Rat> s({Rat(0), Rat(1, 2), Rat(1)}, {Rat(1), Rat(-2)}, Rat(1));
  HKFn<double> flt{to_float(s)};
  return {"two_piece", std::move(s), std::move(flt)};
}

FamilyMember oscillatory_member(int p, int q) {
  return {"osc:" + std::to_string(p) + ":" + std::to_string(q), std::nullopt,
          HKFn<double>(AntiderivFn::oscillatory(p, q))};
}

FamilyMember cos_compact_member() {
  return {"cos_compact", std::nullopt, compactify(HKFn<double>(AntiderivFn::cos_over_x()))};
}

std::vector<FamilyMember> default_family() {
  std::vector<FamilyMember> fam;
  fam.push_back(chi_member());
  fam.push_back(two_piece_member());
  fam.push_back(oscillatory_member(2, 3));
  return fam;
}

FamilyMember parse_family_id(const std::string& id) {
  if (id == "chi") return chi_member();
  if (id == "two_piece") return two_piece_member();
  if (id == "cos_compact") return cos_compact_member();
  if (id.rfind("osc:", 0) == 0) {
    const auto rest = id.substr(4);
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
      try {
        const int p = std::stoi(rest.substr(0, colon));
        const int q = std::stoi(rest.substr(colon + 1));
        return oscillatory_member(p, q);
      } catch (const std::logic_error&) {
      }
    }
    throw ParseError("bad oscillatory id, expected osc:P:Q: " + id);
  }
  throw ParseError("unknown family id: " + id);
}

}  // namespace hk::gallery
