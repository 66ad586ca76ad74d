#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/antiderivative.hpp"
#include "hk/hk_function.hpp"
#include "hk/rational.hpp"
#include "hk/sequence.hpp"
#include "hk/step_function.hpp"

namespace hk::gallery {

// n = j + 2^k with 0 <= j < 2^k: the indicator of (j/2^k, (j+1)/2^k] on
// [0,1]. The blocks sweep the unit interval over and over at ever finer
// dyadic resolution.
StepFn<Rat> typewriter(int n);

// Tail indicator chi_(n, +inf) truncated to [0, L].
StepFn<Rat> heaviside_trunc(int n, const Rat& L);

// Image of chi_(n, +inf) under x -> 1/x: the indicator of (0, 1/n] on [0,1].
// Its variation over (0,1] is 1 for every n >= 2; at n = 1 the ray jump falls
// on the compactified endpoint and the left-continuous image is constant.
StepFn<Rat> heaviside_compact(int n);

// The constant (-1)^n on [0,1].
StepFn<Rat> alternating(int n);

// Deterministic-from-seed canonical step function on [a,b] with at most
// m_max pieces, rational breakpoints, and |values| <= v_max.
StepFn<Rat> random_step(std::uint64_t seed, int m_max, long v_max, const Rat& a, const Rat& b);

FunctionSequence<Rat> typewriter_seq();
FunctionSequence<Rat> heaviside_compact_seq();
FunctionSequence<Rat> alternating_seq();
FunctionSequence<Rat> random_seq(std::uint64_t seed);

// A multiplier used in pairing and product-norm runs. Step members carry
// their exact rational form next to the float form; antiderivative-backed
// members are float-only.
struct FamilyMember {
  std::string id;
  std::optional<StepFn<Rat>> exact;
  HKFn<double> flt;
};

FamilyMember chi_member();
FamilyMember two_piece_member();
FamilyMember oscillatory_member(int p, int q);
FamilyMember cos_compact_member();

// {chi, two_piece, osc:2:3}: one trivial step, one sign-changing step with a
// nonzero integral, one integrand that is integrable only conditionally.
std::vector<FamilyMember> default_family();

// "chi" | "two_piece" | "osc:P:Q" | "cos_compact"
FamilyMember parse_family_id(const std::string& id);

}  // namespace hk::gallery
