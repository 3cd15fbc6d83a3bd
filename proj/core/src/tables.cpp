#include "catsim/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "catsim/error.hpp"
#include "catsim/reference_tables.hpp"

namespace catsim {

namespace {

double q_of(int sign) { return sign > 0 ? kEvenQ : kOddQ; }

double abs_dev(double a, double b) { return std::abs(std::abs(a) - std::abs(b)); }

double param_dev(const PhysicalParams& p, double r_ref, Complex in_ref, Complex disp_ref) {
  return std::max({abs_dev(p.r, r_ref), abs_dev(std::abs(p.alpha_in), std::abs(in_ref)),
                   abs_dev(std::abs(p.alpha_disp), std::abs(disp_ref))});
}

TableRow row_from(const OptResult& res, const PhysicalParams& p, const ReferenceRow& ref) {
  TableRow row;
  row.alpha_scs = res.alpha_scs;
  row.q = res.q;
  row.branch = p.branch;
  row.F_computed = res.fidelity_sq;
  row.F_reference = ref.F;
  row.F_printed = ref.F_printed;
  row.dF = row.F_computed - row.F_reference;
  row.alpha_in = p.alpha_in;
  row.alpha_1 = p.alpha_1;
  row.alpha_disp = p.alpha_disp;
  row.r = p.r;
  row.converged = res.converged;
  row.param_dev = param_dev(p, ref.r, ref.alpha_in, ref.alpha_disp);
  row.note = ref.note;
  return row;
}

std::vector<double> grid(double lo, int count) {
  std::vector<double> v;
  for (int k = 0; k < count; ++k)
    v.push_back(std::round((lo + 0.1 * k) * 10.0) / 10.0);
  return v;
}

void table1(TableDocument& doc) {
  for (double a : grid(0.8, 5))
    for (int s : {+1, -1}) {
      const OptResult res = maximize(1, q_of(s), a, doc.config);
      doc.rows.push_back(row_from(res, res.branch(Branch::A), find_reference(1, a, s, Branch::A)));
    }
}

void table2(TableDocument& doc) {
  for (double a : grid(1.0, 8))
    for (int s : {+1, -1}) {
      const OptResult res = maximize(2, q_of(s), a, doc.config);
      for (Branch b : {Branch::A, Branch::B})
        doc.rows.push_back(row_from(res, res.branch(b), find_reference(2, a, s, b)));
    }
}

void table3(TableDocument& doc) {
  const int dim = doc.config.dim;
  for (const HadamardReferenceRow& ref : table3_reference()) {
    if (ref.branch != Branch::A)
      continue;
    const OptResult odd = maximize(2, kOddQ, ref.alpha_scs, doc.config);
    for (Branch b : {Branch::A, Branch::B}) {
      const HadamardReferenceRow* match = nullptr;
      for (const auto& cand : table3_reference())
        if (cand.alpha_scs == ref.alpha_scs && cand.branch == b)
          match = &cand;
      const PhysicalParams& o = odd.branch(b);
      const Complex in_plus = -0.5 * o.alpha_1;
      const HadamardParams hp = HadamardParams::from_seeds(ref.alpha_scs, ref.r, o.alpha_1, in_plus,
                                                           o.alpha_in, -in_plus, o.alpha_disp, b);
      for (int s : {+1, -1}) {
        const Complex disp = s > 0 ? hp.alpha_plus : hp.alpha_minus;
        const StateVector out = hadamard_gate(s, hp, dim);
        TableRow row;
        row.alpha_scs = ref.alpha_scs;
        row.q = q_of(s);
        row.branch = b;
        row.F_computed = overlap_sq(dsscs({ref.alpha_scs, row.q, disp, ref.r}, dim), out);
        row.F_reference = s > 0 ? match->F_plus : match->F_minus;
        row.F_printed = row.F_reference;
        row.dF = row.F_computed - row.F_reference;
        row.alpha_in = s > 0 ? hp.alpha_in_plus : hp.alpha_in_minus;
        row.alpha_1 = hp.alpha_1;
        row.alpha_disp = disp;
        row.r = ref.r;
        row.converged = odd.converged;
        const PhysicalParams as_params{b, row.alpha_in, row.alpha_1, disp, ref.r};
        row.param_dev = param_dev(as_params, match->r, s > 0 ? match->alpha_in_plus : match->alpha_in_minus,
                                  s > 0 ? match->alpha_plus : match->alpha_minus);
        row.note = match->note;
        doc.rows.push_back(std::move(row));
      }
    }
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

char branch_char(Branch b) { return b == Branch::A ? 'a' : 'b'; }

} // namespace

double TableDocument::max_abs_dF() const {
  double m = 0.0;
  for (const auto& r : rows)
    m = std::max(m, std::abs(r.dF));
  return m;
}

double TableDocument::max_param_dev() const {
  double m = 0.0;
  for (const auto& r : rows)
    m = std::max(m, r.param_dev);
  return m;
}

TableDocument reproduce_table(int which, const OptConfig& config) {
  if (which < 1 || which > 3)
    throw InvalidArgument("reproduce_table: table must be 1, 2 or 3");
  TableDocument doc;
  doc.which = which;
  doc.config = config;
  if (which == 1)
    table1(doc);
  else if (which == 2)
    table2(doc);
  else
    table3(doc);
  return doc;
}

std::string to_csv(const TableDocument& doc) {
  std::string out = "alpha_scs,q,branch,F_computed,F_paper,dF,alpha_in_re,alpha_in_im,alpha_1_re,"
                    "alpha_1_im,alpha_disp_re,alpha_disp_im,r,converged\n";
  for (const auto& r : doc.rows) {
    out += num(r.alpha_scs) + ',' + num(r.q) + ',' + branch_char(r.branch) + ',' + num(r.F_computed) + ',' +
           num(r.F_reference) + ',' + num(r.dF) + ',' + num(r.alpha_in.real()) + ',' + num(r.alpha_in.imag()) +
           ',' + num(r.alpha_1.real()) + ',' + num(r.alpha_1.imag()) + ',' + num(r.alpha_disp.real()) + ',' +
           num(r.alpha_disp.imag()) + ',' + num(r.r) + ',' + (r.converged ? "true" : "false") + '\n';
  }
  return out;
}

std::string to_json(const TableDocument& doc) {
  using nlohmann::json;
  auto c = [](Complex z) { return json::array({z.real(), z.imag()}); };
  json rows = json::array();
  for (const auto& r : doc.rows) {
    json j = {{"alpha_scs", r.alpha_scs},
              {"q", r.q},
              {"branch", std::string(1, branch_char(r.branch))},
              {"F_computed", r.F_computed},
              {"F_paper", r.F_reference},
              {"F_printed", r.F_printed},
              {"dF", r.dF},
              {"alpha_in", c(r.alpha_in)},
              {"alpha_1", c(r.alpha_1)},
              {"alpha_disp", c(r.alpha_disp)},
              {"r", r.r},
              {"converged", r.converged},
              {"param_dev", r.param_dev}};
    if (!r.note.empty())
      j["note"] = r.note;
    rows.push_back(std::move(j));
  }
  const json out = {{"table", doc.which},
                    {"dim", doc.config.dim},
                    {"restarts", doc.config.restarts},
                    {"seed", doc.config.seed},
                    {"restricted", doc.config.restricted},
                    {"max_abs_dF", doc.max_abs_dF()},
                    {"rows", rows}};
  return out.dump(2) + '\n';
}

} // namespace catsim
