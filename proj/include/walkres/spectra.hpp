#pragma once

#include <string>
#include <vector>

#include "walkres/graph.hpp"
#include "walkres/matrix.hpp"

namespace walkres {

struct Spectrum {
    std::vector<double> eigenvalues;  // sorted descending, multiplicities kept
    double lambda2 = 0.0;             // second largest
};

// Eigenvalues of the walk operator P = Diag(deg)^-1 A, computed through the
// symmetric similarity D^-1/2 A D^-1/2 (same spectrum, symmetric solver).
// Checks: largest = 1 and range [-1, 1] within 1e-9.
Spectrum walk_spectrum(const Graph& g);

// Moore-Penrose pseudoinverse of the Laplacian L = Diag(deg) - A via full
// eigendecomposition; eigenvalues below 1e-10 * lambda_max treated as zero.
// Checks on output: row sums 0 (1e-9), symmetry (1e-10), L L+ L = L (1e-8).
Matrix laplacian_pinv(const Graph& g);

// Dense solve with residual acceptance ||ax - b||_inf <= 1e-8 (1 + ||b||_inf).
// `what` names the system in error messages.
std::vector<double> solve_linear(const Matrix& a, const std::vector<double>& b,
                                 const std::string& what = "linear system");

}  // namespace walkres
