#pragma once

#include "gabdyn/report.hpp"
#include "gabdyn/resolution.hpp"

namespace gabdyn {

/// All pairings among lambda_0..lambda_{n-1} equal -(n-1)/n on the
/// diagonal and 1/n off it, for every n in [n_min, n_max]; plus the
/// short-cut identity w_k(Lambda_1) = Lambda_1 for k >= 2.
Report lambda_lemma_check(long n_min = 2, long n_max = 12);

/// Structural checks of the Milnor lattice itself: basis size mu',
/// self-pairings -2, radical of rank one spanned by delta_0.
Report verify_milnor_lattice(const MilnorLattice& lat);

/// Every identity for one (triple, group) pair: order identity, the
/// G-action checks, the orbit Gram lemma, the lambda lemma for the n_i
/// that occur, and the hat Gram lemma with rank and kernel conditions.
Report verify_case(const CuspTriple& t, const SymmetryGroup& G);

/// Same, against a caller-supplied Milnor lattice (the corrupt-Gram test
/// hook goes through here).
Report verify_case(const MilnorLattice& lat, const SymmetryGroup& G);

/// Test hook: a copy of the lattice with one Gram entry altered, so the
/// verification stack must report failures.
MilnorLattice corrupt_gram(const MilnorLattice& lat);

/// The built-in triples driven by selftest and the acceptance criteria.
const std::vector<CuspTriple>& selftest_triples();

/// verify_case over every subgroup of every catalog triple with order
/// <= order_bound, plus the lambda lemma sweep.
Report selftest(long order_bound);

}  // namespace gabdyn
