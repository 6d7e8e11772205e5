#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace solvsph {

// All arithmetic in this project is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on garbage
// or zero denominator.
Rat parse_rat(const std::string& s);

inline std::string rat_str(const Rat& q) { return q.get_str(); }

QVec to_qvec(const std::vector<int>& v);

bool qvec_is_zero(const QVec& v);

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& v);

}  // namespace solvsph
