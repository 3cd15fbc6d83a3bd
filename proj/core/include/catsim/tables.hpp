#pragma once

#include <string>
#include <vector>

#include "catsim/optimizer.hpp"

namespace catsim {

struct TableRow {
  double alpha_scs = 0.0;
  double q = 0.0;
  Branch branch = Branch::A;
  double F_computed = 0.0;
  /// Reference fidelity (printed value, or the corrected one for known typos).
  double F_reference = 0.0;
  double F_printed = 0.0;
  double dF = 0.0; // F_computed - F_reference
  Complex alpha_in;
  Complex alpha_1;
  Complex alpha_disp;
  double r = 0.0;
  bool converged = false;
  /// Largest of ||r| - |r_ref||, ||alpha_in| - |ref||, ||alpha_disp| - |ref||.
  double param_dev = 0.0;
  std::string note;
};

struct TableDocument {
  int which = 1;
  OptConfig config;
  std::vector<TableRow> rows;

  double max_abs_dF() const;
  double max_param_dev() const;
};

/// Table 1: order 1, alpha_scs 0.8..1.2, even and odd (branch A).
/// Table 2: order 2, alpha_scs 1.0..1.7, even and odd, branches A and B.
/// Table 3: Hadamard gate, alpha_scs 1.3..1.7. The odd optimum supplies
/// alpha_1, the odd seed and alpha_-; the even seed is -alpha_1/2 with
/// alpha_+ its negative; both outputs are scored at the shared printed r.
TableDocument reproduce_table(int which, const OptConfig& config = {});

/// Header: alpha_scs,q,branch,F_computed,F_paper,dF,alpha_in_re,alpha_in_im,
/// alpha_1_re,alpha_1_im,alpha_disp_re,alpha_disp_im,r,converged
std::string to_csv(const TableDocument& doc);
std::string to_json(const TableDocument& doc);

} // namespace catsim
