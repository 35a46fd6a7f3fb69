#ifndef MOMARK_SRC_PROBLEMS_FORMULAS_HPP
#define MOMARK_SRC_PROBLEMS_FORMULAS_HPP

#include "momark/core.hpp"

namespace momark::formulas {

using X = DecisionVector;

ObjectiveVector bk1(const X& x);
ObjectiveVector dg01(const X& x);
ObjectiveVector dpam1(const X& x);
ObjectiveVector far1(const X& x);
ObjectiveVector fonseca(const X& x);
ObjectiveVector kursawe(const X& x);
ObjectiveVector ikk1(const X& x);
ObjectiveVector im1(const X& x);
ObjectiveVector lrs1(const X& x);
ObjectiveVector mhhm1(const X& x);
ObjectiveVector mhhm2(const X& x);
ObjectiveVector mlf1(const X& x);
ObjectiveVector mlf2(const X& x);
ObjectiveVector mop1(const X& x);
ObjectiveVector mop2(const X& x);
ObjectiveVector mop3(const X& x);
ObjectiveVector mop4(const X& x);
ObjectiveVector mop5(const X& x);
ObjectiveVector mop6(const X& x);
ObjectiveVector mop7(const X& x);
ObjectiveVector qv1(const X& x);
ObjectiveVector sch1(const X& x);
ObjectiveVector sk1(const X& x);
ObjectiveVector sk2(const X& x);
ObjectiveVector sp1(const X& x);
ObjectiveVector ssfyy1(const X& x);
ObjectiveVector ssfyy2(const X& x);
ObjectiveVector vu1(const X& x);
ObjectiveVector vu2(const X& x);
ObjectiveVector zlt1(const X& x);
ObjectiveVector fes1(const X& x);
ObjectiveVector fes2(const X& x);
ObjectiveVector fes3(const X& x);

/// The fixed orthogonal matrix DPAM1 rotates its input with.
const Eigen::MatrixXd& dpam1_rotation();

// DTLZ family; the objective count is passed explicitly.
ObjectiveVector dtlz1(const X& x, int m);
ObjectiveVector dtlz2(const X& x, int m);
ObjectiveVector dtlz3(const X& x, int m);
ObjectiveVector dtlz4(const X& x, int m);
ObjectiveVector dtlz5(const X& x, int m);
ObjectiveVector dtlz6(const X& x, int m);

ObjectiveVector zdt1(const X& x);
ObjectiveVector zdt2(const X& x);
ObjectiveVector zdt3(const X& x);
ObjectiveVector zdt4(const X& x);
ObjectiveVector zdt6(const X& x);

/// WFG1..WFG9 with k position-related and n - k distance-related variables.
ObjectiveVector wfg(int id, const X& z, int k, int m);

} // namespace momark::formulas

#endif
