#pragma once

#include <Eigen/SparseCore>

#include "antsched/instance.hpp"

namespace antsched {

// The four 0/1 mapping matrices of the formulation, assembled in sparse form:
//   R (|resources| x |view periods|)   resource r serves view period v
//   A (|activities| x |view periods|)  view period v belongs to activity a
//   M (|missions| x |activities|)      activity a belongs to mission m
//   V (|view periods| x |slots|)       view period v is usable at slot t
// A maintenance slot of any member resource zeroes the V entry, so maintenance
// needs no constraints of its own.
struct MatrixBundle {
  Eigen::SparseMatrix<int> R;
  Eigen::SparseMatrix<int> A;
  Eigen::SparseMatrix<int> M;
  Eigen::SparseMatrix<int> V;
};

MatrixBundle assemble_matrices(const ProblemInstance& instance);

}  // namespace antsched
