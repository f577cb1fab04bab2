#include "walkres/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace walkres {

namespace {

Eigen::MatrixXd adjacency(const Graph& g) {
    const int n = g.num_vertices();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    return a;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    Eigen::MatrixXd l = -adjacency(g);
    for (int v = 0; v < g.num_vertices(); ++v) l(v, v) = g.degree(v);
    return l;
}

}  // namespace

Spectrum walk_spectrum(const Graph& g) {
    g.require_connected("walk_spectrum");
    const int n = g.num_vertices();
    // Symmetric similarity D^-1/2 A D^-1/2 shares P's spectrum and keeps the
    // solver in symmetric territory (real eigenvalues, stable).
    Eigen::MatrixXd s = adjacency(g);
    Eigen::VectorXd inv_sqrt_deg(n);
    for (int v = 0; v < n; ++v) inv_sqrt_deg(v) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    s = inv_sqrt_deg.asDiagonal() * s * inv_sqrt_deg.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_error("walk_spectrum: eigensolver failed on n=" + std::to_string(n) + " graph");

    Spectrum out;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    if (std::abs(out.eigenvalues.front() - 1.0) > 1e-9)
        throw invariant_violation("walk_spectrum: leading eigenvalue " +
                                  std::to_string(out.eigenvalues.front()) + " != 1");
    for (double lam : out.eigenvalues)
        if (lam < -1.0 - 1e-9 || lam > 1.0 + 1e-9)
            throw invariant_violation("walk_spectrum: eigenvalue outside [-1, 1]");
    out.lambda2 = n >= 2 ? out.eigenvalues[1] : 1.0;
    return out;
}

Matrix laplacian_pinv(const Graph& g) {
    g.require_connected("laplacian_pinv");
    const int n = g.num_vertices();
    const Eigen::MatrixXd l = laplacian(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
    if (solver.info() != Eigen::Success)
        throw numeric_error("laplacian_pinv: eigensolver failed on n=" + std::to_string(n) + " graph");

    const Eigen::VectorXd& ev = solver.eigenvalues();
    const double cutoff = 1e-10 * ev(n - 1);  // ascending order: last is lambda_max
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        if (ev(i) > cutoff) inv(i) = 1.0 / ev(i);
    const Eigen::MatrixXd pinv =
        solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();

    // Contract checks: null space, symmetry, and the defining L L+ L = L.
    if ((pinv.rowwise().sum()).cwiseAbs().maxCoeff() > 1e-9)
        throw invariant_violation("laplacian_pinv: row sums not zero");
    if ((pinv - pinv.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw invariant_violation("laplacian_pinv: not symmetric");
    if ((l * pinv * l - l).cwiseAbs().maxCoeff() > 1e-8)
        throw invariant_violation("laplacian_pinv: L L+ L deviates from L");

    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = pinv(i, j);
    return out;
}

std::vector<double> solve_linear(const Matrix& a, const std::vector<double>& b,
                                 const std::string& what) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != a.rows() || static_cast<int>(b.size()) != n)
        throw invalid_input(what + ": shape mismatch");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), n);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) throw numeric_error(what + ": singular to working precision");
    Eigen::VectorXd x = lu.solve(rhs);

    const double resid = (m * x - rhs).cwiseAbs().maxCoeff();
    const double bnorm = rhs.cwiseAbs().maxCoeff();
    if (resid > 1e-8 * (1.0 + bnorm))
        throw numeric_error(what + ": residual " + std::to_string(resid) + " too large");
    return std::vector<double>(x.data(), x.data() + n);
}

}  // namespace walkres
