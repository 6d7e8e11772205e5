#pragma once

#include <string>
#include <vector>

#include "solvsph/datum.hpp"
#include "solvsph/root_system.hpp"

namespace solvsph {

struct Table1Match {
  bool accepted = false;
  int row = 0;  // 1..6 when accepted
};

// Intrinsic match of (alpha, pa) against the table of admissible active-root
// pairs: the type of the subsystem generated by Supp alpha and alpha's
// coefficient pattern decide the row, never node numbering.
Table1Match table1_check(const RootSystem& rs, const Root& alpha, int pa);

enum class PairPattern { D0, D1, E1, D2, E2, None };

const char* pattern_name(PairPattern p);

// Shape of an (unordered) pair of labelled maximal active roots. Symmetric.
PairPattern pair_pattern(const RootSystem& rs, const Root& a, int pa, const Root& b, int pb);

// Every root of M keeps a support node outside the other supports.
bool check_C(const SphericalDatum& d);

// <Ker tau> ∩ <Pi_0> = <alpha - beta | alpha, beta in M, alpha ~ beta>
// as rational subspaces.
bool check_T(const FullDatum& full);

struct ValidationReport {
  enum class Verdict { pass, fail, skipped };

  Verdict structural = Verdict::pass;
  Verdict cond_A = Verdict::pass;
  Verdict cond_D = Verdict::pass;
  Verdict cond_E = Verdict::pass;
  Verdict cond_C = Verdict::pass;
  Verdict cond_T = Verdict::skipped;

  struct PairInfo {
    int i, j;
    bool equivalent;
    PairPattern pattern;
  };
  std::vector<PairInfo> pairs;
  std::vector<int> table_rows;  // per M element, 0 when rejected
  std::string witness;          // first failure

  bool valid() const {
    auto ok = [](Verdict v) { return v != Verdict::fail; };
    return ok(structural) && ok(cond_A) && ok(cond_D) && ok(cond_E) && ok(cond_C) && ok(cond_T);
  }
};

// Conditions (A), (D), (E), (C) on the datum alone; (T) reported as skipped.
ValidationReport validate(const SphericalDatum& d);

// All five conditions plus the structural invariants (primitivity of
// Ker tau, declared equivalence agreeing with Ker tau).
ValidationReport validate(const FullDatum& full);

}  // namespace solvsph
