#pragma once

#include <map>
#include <string>
#include <vector>

#include "gl2lab/enumerate.hpp"
#include "gl2lab/subgroup.hpp"

namespace gl2 {

struct CheckFailure {
    std::string what;
    std::string subgroup_key;
    std::string detail;
};

struct VerifyReport {
    std::string target;  // "index2" | "lemma34" | "prop32" | "prop31"
    int modulus = 0;
    std::string part;
    bool pass = false;
    long long checked = 0;
    std::vector<CheckFailure> failures;
    std::map<std::string, std::string> info;
};

std::string verify_report_to_json(const VerifyReport& r);

/// Index-two subgroup lemma, exhaustively over all subgroups of N:
/// for G <= N with G not inside C, every x in G \ C satisfies
/// G = <x, G cap C>, <x> cap C = <x^2>, 2 | |x| and [G : G cap C] = 2.
VerifyReport verify_index2_lemma(const Subgroup& n, const Subgroup& c, const Budget& budget = {});

/// Per-clause admissibility oracle for the conjugate-containment
/// divisibilities; clause in {a, b, c1, c2, d}.
bool lemma34_oracle(int p, long long k, const std::string& clause);

/// Threshold arithmetic with k = e*e0; kase in {a, b, c, d}.
bool divisibility_oracle(int p, int e, int e0, const std::string& kase);

/// Brute-force conjugator search over all k in 1..p^2-1; the derived
/// admissible-k sets must match lemma34_oracle exactly.
VerifyReport verify_lemma34(int p, const std::string& part, const Budget& budget = {});

/// Abelian subgroup shapes. part in {a, b, c} or "all".
VerifyReport verify_prop32(int p, const std::string& part, const Budget& budget = {});

/// Group side of the cyclotomic criterion over GL2(n):
/// G cap SL2 is the kernel of det on G, and G cap SL2 = 1 forces G abelian
/// with det injective.
VerifyReport verify_prop31_group_side(int n, const Budget& budget = {});

}  // namespace gl2
