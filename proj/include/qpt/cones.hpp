#pragma once

#include <optional>

#include "qpt/rng.hpp"
#include "qpt/structure.hpp"

namespace qpt {

// Constant-coefficient J-real form of holomorphic bidegree (2k, 0), the
// ambient space of the positivity cones. Validated by const_form.
struct ConstForm2k {
    Form form;
    std::size_t k = 0;
    std::size_t n = 0;
};

// checks constants, J-reality and pure bidegree (2k, 0); zero input needs the
// intended degree spelled out since it is homogeneous of every degree
ConstForm2k const_form(Form f, std::size_t n, std::optional<std::size_t> k_hint = std::nullopt);

enum class ConeVerdict { Member, NonMember, Unknown };

// Membership evidence that re-verifies by direct evaluation: a conic weight
// vector over the sampled generator list for strong membership, or a
// complementary-degree strongly positive form pairing negatively against the
// input for refutation.
struct ConeCertificate {
    ConeVerdict verdict = ConeVerdict::Unknown;
    std::vector<Rational> weights;
    std::optional<Form> refuter;
    std::optional<Rational> pairing;  // top ratio against the refuter
    std::optional<std::vector<Quaternion>> vector_witness;
    std::string detail;
};

// Pullback of the canonical positive top generator of H^k along the H-linear
// map q -> map * q; a sum of such pullbacks is strongly positive by
// definition.
ConstForm2k pullback_generator(const QuaternionMatrix& map, std::size_t n);

// seeded batch of pullback generators with small rational map entries
std::vector<ConstForm2k> strong_generators(std::size_t k, std::size_t n, std::size_t count,
                                           std::uint64_t seed);

// ratio of a constant real top-degree (2n, 0)-form to dz_1 ^ ... ^ dz_2n
Rational top_ratio(const Form& f);

// Exact two-form test through the matrix correspondence: member iff the
// paired hyperhermitian matrix is positive semidefinite. Decides both the
// strong and the weak cone, which coincide in degree two.
ConeCertificate is_weakly_positive_2form(const ConstForm2k& eta);

// Refutation sweep: pairs eta against `budget` sampled strongly positive
// forms of complementary degree. A negative top ratio refutes exactly;
// otherwise Unknown with the smallest observed ratio in `pairing`.
ConeCertificate weak_positive_test(const ConstForm2k& eta, std::size_t budget, std::uint64_t seed);

// Conic-hull membership over sampled generators by phase-1 linear
// programming, rational up to 64 generators and floating-point with exact
// refinement beyond. Feasible weights re-verify against eta before Member is
// returned; an infeasible or unrefined program yields Unknown since the
// sample need not span the cone.
ConeCertificate strong_positive_lp(const ConstForm2k& eta, std::size_t budget, std::uint64_t seed);

}  // namespace qpt
