#include "catsim/reference_tables.hpp"

#include <array>
#include <cmath>

#include "catsim/error.hpp"

namespace catsim {

namespace {

constexpr Complex I(double v) { return {0.0, v}; }

constexpr Branch A = Branch::A;
constexpr Branch B = Branch::B;

ReferenceRow t1(double a, int s, double f, double r, double in, double disp) {
  return {1, a, s, A, f, f, r, I(in), 0.0, I(disp), ""};
}

ReferenceRow t2(double a, int s, Branch b, double f, double r, double in, double a1, double disp,
                const char* note = "", double printed = 0.0) {
  return {2, a, s, b, f, printed == 0.0 ? f : printed, r, I(in), I(a1), I(disp), note};
}

const std::array<ReferenceRow, 10>& t1_rows() {
  static const std::array<ReferenceRow, 10> rows{
      t1(0.8, +1, 0.988095, -0.349324, 1.83218, 2.26764), t1(0.8, -1, 0.999376, -0.207344, 0.0, 0.0),
      t1(0.9, +1, 0.97744, -0.397861, 1.49474, 1.98742),  t1(0.9, -1, 0.998584, -0.258353, 0.0, 0.0),
      t1(1.0, +1, 0.962444, -0.445031, 1.2464, 1.78867),  t1(1.0, -1, 0.997109, -0.31257, 0.0, 0.0),
      t1(1.1, +1, 0.943626, -0.491368, 1.05247, 1.6373),  t1(1.1, -1, 0.994411, -0.36893, 0.0, 0.0),
      t1(1.2, +1, 0.922092, -0.537234, 0.900828, 1.52201), t1(1.2, -1, 0.990085, -0.426398, 0.0, 0.0),
  };
  return rows;
}

const std::array<ReferenceRow, 32>& t2_rows() {
  static const std::array<ReferenceRow, 32> rows{
      t2(1.0, +1, A, 0.9999, -0.179612, 1.5904, -3.1808, -1.5904),
      t2(1.0, +1, B, 0.9999, -0.179612, -1.5904, 3.1808, 1.5904),
      t2(1.0, -1, A, 0.997473, -0.253791, 0.243421, -4.09883, -4.09884),
      t2(1.0, -1, B, 0.997473, -0.253791, -3.85488, 4.09883, 0.0),

      t2(1.1, +1, A, 0.999738, -0.215319, 1.45591, -2.91183, -1.45591),
      t2(1.1, +1, B, 0.999738, -0.215319, -1.45591, 2.91183, 1.45591),
      t2(1.1, -1, A, 0.995285, -0.292058, 0.279104, -3.56808, -3.56809),
      t2(1.1, -1, B, 0.995285, -0.292058, -3.28898, 3.56808, 0.0),

      t2(1.2, +1, A, 0.999392, -0.253272, 1.34629, -2.69259, -1.34629),
      t2(1.2, +1, B, 0.999392, -0.253272, -1.34629, 2.69259, 1.34629),
      t2(1.2, -1, A, 0.991945, -0.330436, 0.312901, -3.17489, -3.17491),
      t2(1.2, -1, B, 0.991945, -0.330436, -2.86199, 3.17489, 0.0),

      t2(1.3, +1, A, 0.998728, -0.293054, 1.25598, -2.51196, -1.25598,
         "alpha_1 printed as -i2.251196; -i2.51196 matches branch b and alpha_1 = -2 alpha_in"),
      t2(1.3, +1, B, 0.998728, -0.293054, -1.25598, 2.51196, 1.25598),
      t2(1.3, -1, A, 0.987245, -0.368812, 0.344249, -2.87582, -2.87586),
      t2(1.3, -1, B, 0.987245, -0.368812, -2.53147, 2.87582, 0.0),

      t2(1.4, +1, A, 0.997583, -0.334228, 1.18095, -2.3619, -1.18095),
      t2(1.4, +1, B, 0.997583, -0.334228, -1.18095, 2.3619, 1.18095,
         "alpha_+ printed as i1.19095; i1.18095 matches branch a and alpha_+ = -alpha_in"),
      t2(1.4, -1, A, 0.981078, -0.407125, 0.373226, -2.64328, -2.64334),
      t2(1.4, -1, B, 0.981078, -0.407125, -2.27005, 2.64328, 0.0),

      t2(1.5, +1, A, 0.995765, -0.376383, 1.11822, -2.23643, -1.11822),
      t2(1.5, +1, B, 0.995765, -0.376383, -1.11822, 2.23643, 1.11822),
      t2(1.5, -1, A, 0.973453, -0.445339, 0.399473, -2.45894, -2.45903,
         "F printed as 0.987245 (the 1.3 value); the same parameters in the Hadamard table give 0.973453",
         0.987245),
      t2(1.5, -1, B, 0.973453, -0.445339, -2.05947, 2.45894, 0.0,
         "F printed as 0.987245 (the 1.3 value); the same parameters in the Hadamard table give 0.973453",
         0.987245),

      t2(1.6, +1, A, 0.993085, -0.419055, 1.06794, -2.13588, -1.06794),
      t2(1.6, +1, B, 0.993085, -0.419055, -1.06794, 2.13588, 1.06794),
      t2(1.6, -1, A, 0.964491, -0.483419, 0.423166, -2.31033, -2.31047),
      t2(1.6, -1, B, 0.964491, -0.483419, -1.88716, 2.31033, 0.0),

      t2(1.7, +1, A, 0.989373, -0.46194597, 1.02351, -2.04701, -1.02351),
      t2(1.7, +1, B, 0.989373, -0.46194597, -1.02351, 2.04701, 1.02351),
      t2(1.7, -1, A, 0.954387, -0.521336, 0.444419, -2.18895, -2.18914),
      t2(1.7, -1, B, 0.954387, -0.521336, -1.74453, 2.18895, 0.0),
  };
  return rows;
}

HadamardReferenceRow t3(double a, double r, Branch b, double a1, double hg, double beta, double in_p,
                        double plus, double in_m, double minus, double fp, double fm,
                        const char* note = "") {
  return {a, r, b, I(a1), I(hg), I(beta), I(in_p), I(plus), I(in_m), I(minus), fp, fm, note};
}

const std::array<HadamardReferenceRow, 10>& t3_rows() {
  static const std::array<HadamardReferenceRow, 10> rows{
      t3(1.3, -0.351, A, -2.87582, 0.546781, 0.89113, 1.43791, -1.43791, 0.344349, -2.87586, 0.986582,
         0.986539),
      t3(1.3, -0.351, B, 2.87582, 0.54678, -1.98469, -1.43791, 1.43791, -2.53147, 0.0, 0.986582, 0.986539),
      t3(1.4, -0.40712, A, -2.64328, 0.474207, 0.847433, 1.32164, -1.32164, 0.373226, -2.64334, 0.986162,
         0.981078),
      t3(1.4, -0.40712, B, 2.64328, 0.474205, -1.79585, -1.32164, 1.32164, -2.27005, 0.0, 0.986162,
         0.981078),
      t3(1.5, -0.445339, A, -2.45894, 0.414998, 0.8144715, 1.22947, -1.22947, 0.399473, -2.45903, 0.985525,
         0.973453),
      t3(1.5, -0.445339, B, 2.45894, 0.415, -1.64447, -1.22947, 1.22947, -2.05947, 0.0, 0.985525, 0.973453),
      t3(1.6, -0.483418, A, -2.31033, 0.366002, 0.789168, 1.15517, -1.15517, 0.423166, -2.31047, 0.983888,
         0.964491),
      t3(1.6, -0.483418, B, 2.31033, 0.365995, -1.52116, -1.15517, 1.15517, -1.88716, 0.0, 0.983888,
         0.964491),
      t3(1.7, -0.521336, A, -2.188915, 0.32503, 0.769449, 1.09448, -1.09448, 0.444419, -2.18914, 0.98118,
         0.954387, "alpha_1 printed without the imaginary unit; branch b and the seeds fix it to -i2.188915"),
      t3(1.7, -0.521336, B, 2.188915, 0.325025, -1.41951, -1.09448, 1.09448, -1.74453, 0.0, 0.98118,
         0.954387),
  };
  return rows;
}

} // namespace

HadamardParams HadamardReferenceRow::params() const {
  return HadamardParams::from_table(alpha_scs, r, alpha_1, alpha_hg, alpha_in_plus, alpha_in_minus,
                                    alpha_plus, alpha_minus, branch);
}

std::span<const ReferenceRow> table1_reference() { return t1_rows(); }
std::span<const ReferenceRow> table2_reference() { return t2_rows(); }
std::span<const HadamardReferenceRow> table3_reference() { return t3_rows(); }

const ReferenceRow& find_reference(int table, double alpha_scs, int q_sign, Branch branch) {
  if (table != 1 && table != 2)
    throw InvalidArgument("find_reference: table must be 1 or 2");
  const auto rows = table == 1 ? table1_reference() : table2_reference();
  for (const auto& row : rows)
    if (std::abs(row.alpha_scs - alpha_scs) < 1e-9 && row.q_sign == q_sign &&
        (table == 1 || row.branch == branch))
      return row;
  throw InvalidArgument("find_reference: no such row");
}

} // namespace catsim
