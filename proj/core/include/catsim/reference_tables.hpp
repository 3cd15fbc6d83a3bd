#pragma once

// Published optimum parameters for the one- and two-photon constructions and
// the displacing Hadamard gate. Values are as printed except where a row's
// `note` says otherwise; `F_printed` always keeps the printed fidelity.

#include <span>

#include "catsim/circuit.hpp"

namespace catsim {

struct ReferenceRow {
  int table = 1; // 1 or 2
  double alpha_scs = 1.0;
  int q_sign = +1; // +1 even (q = pi/4), -1 odd (q = -pi/4)
  Branch branch = Branch::A;
  double F = 0.0;
  double F_printed = 0.0;
  double r = 0.0;
  Complex alpha_in;
  Complex alpha_1; // table 2 only
  Complex alpha_disp;
  const char* note = "";
};

struct HadamardReferenceRow {
  double alpha_scs = 1.0;
  double r = 0.0;
  Branch branch = Branch::A;
  Complex alpha_1;
  Complex alpha_hg;
  Complex beta;
  Complex alpha_in_plus;
  Complex alpha_plus;
  Complex alpha_in_minus;
  Complex alpha_minus;
  double F_plus = 0.0;
  double F_minus = 0.0;
  const char* note = "";

  HadamardParams params() const;
};

/// Ten rows: alpha_scs 0.8..1.2, even then odd. Only branch A is printed.
std::span<const ReferenceRow> table1_reference();

/// 32 rows: alpha_scs 1.0..1.7, for each even A, even B, odd A, odd B.
std::span<const ReferenceRow> table2_reference();

/// Ten rows: alpha_scs 1.3..1.7, branches A and B.
std::span<const HadamardReferenceRow> table3_reference();

const ReferenceRow& find_reference(int table, double alpha_scs, int q_sign, Branch branch);

} // namespace catsim
