// Copyright 2026-present the qwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qwalk/kernels.hpp"

namespace qwalk {
namespace {

RealMatrix to_double(const IntMatrix& m) {
    RealMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<double>(m(i, j));
    return r;
}

// y += a * x over whole matrices.
void accumulate(RealMatrix& y, double a, const RealMatrix& x) {
    require_same_shape(y, x, "accumulate");
    kernels::active().axpy(a, x.data(), y.data(), x.values().size());
}

RealMatrix symmetric_part(const RealMatrix& u) {
    RealMatrix s(u.rows(), u.cols(), 0.0);
    const RealMatrix ut = u.transpose();
    accumulate(s, 0.5, u);
    accumulate(s, 0.5, ut);
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<SpectralDecomposition::Group> SpectralDecomposition::groups() const {
    std::vector<Group> out;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (!out.empty() && eigenvalues[i] - eigenvalues[i - 1] < tolerance) {
            ++out.back().count;
        } else {
            out.push_back({0.0, i, 1});
        }
    }
    for (auto& g : out) {
        double sum = 0.0;
        for (std::size_t i = g.first; i < g.first + g.count; ++i) sum += eigenvalues[i];
        g.value = sum / static_cast<double>(g.count);
    }
    return out;
}

RealMatrix SpectralDecomposition::projector(const Group& group) const {
    const std::size_t n = vectors.rows();
    RealMatrix p(n, n, 0.0);
    const auto& k = kernels::active();
    std::vector<double> col(n);
    for (std::size_t c = group.first; c < group.first + group.count; ++c) {
        for (std::size_t i = 0; i < n; ++i) col[i] = vectors(i, c);
        for (std::size_t i = 0; i < n; ++i)
            if (col[i] != 0.0) k.axpy(col[i], col.data(), p.row(i).data(), n);
    }
    return p;
}

double SpectralDecomposition::reconstruction_error(const RealMatrix& a) const {
    RealMatrix scaled = vectors;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= eigenvalues[j];
    return kernels::max_abs_diff(kernels::gemm(scaled, vectors.transpose()), a);
}

SpectralDecomposition sym_eig(const RealMatrix& input) {
    if (!input.is_square()) throw std::invalid_argument("sym_eig: matrix is not square");
    const std::size_t n = input.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(input(i, j) - input(j, i)) > 1e-12)
                throw std::invalid_argument("sym_eig: matrix is not symmetric");

    RealMatrix a = input;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
    RealMatrix vt = RealMatrix::identity(n);  // rows are eigenvectors
    const auto& k = kernels::active();

    double total = 0.0;
    for (double x : a.values()) total += x * x;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off <= 1e-32 * total || off == 0.0) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                if (sweep > 3 && std::fabs(apq) < 1e-18 * (std::fabs(app) + std::fabs(aqq))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                if (std::fabs(theta) > 1e150) t = 0.5 / std::fabs(theta);
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                k.rotate(a.row(p).data(), a.row(q).data(), n, c, s);
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    a(r, p) = a(p, r);
                    a(r, q) = a(q, r);
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                k.rotate(vt.row(p).data(), vt.row(q).data(), n, c, s);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.vectors = RealMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        d.eigenvalues[c] = a(order[c], order[c]);
        for (std::size_t i = 0; i < n; ++i) d.vectors(i, c) = vt(order[c], i);
    }
    return d;
}

// ---------------------------------------------------------------------------

int EigenphaseSet::dimension() const {
    int total = plus_one + minus_one;
    for (const auto& p : phases) total += 2 * p.multiplicity;
    return total;
}

namespace {

void add_cosine(std::vector<EigenphaseSet::Phase>& phases, double c, int multiplicity) {
    for (auto& p : phases)
        if (std::fabs(p.cosine - c) < kSpectralTolerance) {
            p.multiplicity += multiplicity;
            return;
        }
    phases.push_back({std::acos(c), c, multiplicity});
}

void sort_phases(std::vector<EigenphaseSet::Phase>& phases) {
    std::sort(phases.begin(), phases.end(), [](const auto& x, const auto& y) { return x.theta < y.theta; });
}

}  // namespace

EigenphaseSet walk_phases_from_graph(const Graph& g) {
    const Bipartition b = bipartition(g);
    const DegreeProfile prof = degree_profile(g, b);
    if (!prof.biregular()) throw GraphError("graph is not biregular");
    const double d0d1 = static_cast<double>(prof.product());

    EigenphaseSet out;
    for (double lambda : adjacency_spectrum(g)) {
        if (lambda <= kSpectralTolerance) continue;
        const double mu = lambda * lambda / d0d1;
        if (mu >= 1.0 - kSpectralTolerance) continue;
        add_cosine(out.phases, 2.0 * mu - 1.0, 1);
    }
    sort_phases(out.phases);
    const auto dims = pm1_eigenspace_dims(g, b);
    out.plus_one = dims.plus;
    out.minus_one = dims.minus;
    return out;
}

EigenphaseSet numeric_walk_spectrum(const RealMatrix& u) {
    const auto d = sym_eig(symmetric_part(u));
    EigenphaseSet out;
    for (const auto& grp : d.groups()) {
        if (grp.value >= 1.0 - kSpectralTolerance) {
            out.plus_one += static_cast<int>(grp.count);
        } else if (grp.value <= -1.0 + kSpectralTolerance) {
            out.minus_one += static_cast<int>(grp.count);
        } else {
            if (grp.count % 2 != 0) throw std::logic_error("numeric_walk_spectrum: unpaired complex eigenvalue");
            add_cosine(out.phases, grp.value, static_cast<int>(grp.count / 2));
        }
    }
    sort_phases(out.phases);
    return out;
}

EigenspaceDims pm1_eigenspace_dims(const Graph& g, const Bipartition& b) {
    if (!g.is_connected()) throw DisconnectedError();
    const int c0 = static_cast<int>(b.c0.size());
    const int c1 = static_cast<int>(b.c1.size());
    const int r = static_cast<int>(rank(biadjacency_matrix(g, b)));
    return {g.edge_count() - c0 - c1 + 2, c0 + c1 - 2 * r};
}

EigenspaceDims pm1_eigenspace_dims(const WalkOperator& w) { return pm1_eigenspace_dims(w.graph, w.parts); }

// ---------------------------------------------------------------------------

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix c{re, im};
    for (std::size_t i = 0; i < im.rows(); ++i)
        for (std::size_t j = 0; j < im.cols(); ++j) c.im(i, j) = -im(i, j);
    return c;
}

ComplexMatrix complex_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c{kernels::gemm(a.re, b.re), kernels::gemm(a.re, b.im)};
    accumulate(c.re, -1.0, kernels::gemm(a.im, b.im));
    accumulate(c.im, 1.0, kernels::gemm(a.im, b.re));
    return c;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.re.values().size(); ++i)
        m = std::max(m, std::hypot(a.re.values()[i], a.im.values()[i]));
    return m;
}

RealMatrix normalized_characteristic(const Graph& g, const std::vector<int>& color_class) {
    RealMatrix m(static_cast<std::size_t>(g.edge_count()), color_class.size(), 0.0);
    for (std::size_t c = 0; c < color_class.size(); ++c) {
        const auto& cell = g.incident_edges(color_class[c]);
        const double w = 1.0 / std::sqrt(static_cast<double>(cell.size()));
        for (int e : cell) m(e, c) = w;
    }
    return m;
}

std::vector<InteriorEigenvalue> interior_eigenvalues(const WalkOperator& w) {
    const RealMatrix p0 = normalized_characteristic(w.graph, w.parts.c0);
    const RealMatrix p1 = normalized_characteristic(w.graph, w.parts.c1);
    const RealMatrix chat = kernels::gemm(p1.transpose(), p0);
    const auto d = sym_eig(kernels::gemm(chat, chat.transpose()));
    std::vector<InteriorEigenvalue> out;
    for (const auto& grp : d.groups()) {
        if (grp.value <= kSpectralTolerance || grp.value >= 1.0 - kSpectralTolerance) continue;
        out.push_back({grp.value, static_cast<int>(grp.count), d.projector(grp)});
    }
    return out;
}

std::pair<ComplexMatrix, ComplexMatrix> complex_eigenprojection(const WalkOperator& w, double mu,
                                                                const RealMatrix& e_mu) {
    if (!(mu > kSpectralTolerance && mu < 1.0 - kSpectralTolerance))
        throw std::invalid_argument("complex_eigenprojection: mu must lie strictly between 0 and 1");
    const RealMatrix p1 = normalized_characteristic(w.graph, w.parts.c1);
    const RealMatrix wm = kernels::gemm(kernels::gemm(p1, e_mu), p1.transpose());
    const RealMatrix p = to_real(w.P);
    const RealMatrix pw = kernels::gemm(p, wm);
    const RealMatrix wp = kernels::gemm(wm, p);
    const RealMatrix pwp = kernels::gemm(pw, p);

    const double c = 2.0 * mu - 1.0;
    const double s2 = 1.0 - c * c;
    const double s = std::sqrt(s2);

    // (1/sin^2)((cos+1)W - (e^{i theta}+1)PW - (e^{-i theta}+1)WP + 2PWP)
    ComplexMatrix f{RealMatrix(wm.rows(), wm.cols(), 0.0), RealMatrix(wm.rows(), wm.cols(), 0.0)};
    accumulate(f.re, (c + 1.0) / s2, wm);
    accumulate(f.re, -(c + 1.0) / s2, pw);
    accumulate(f.re, -(c + 1.0) / s2, wp);
    accumulate(f.re, 2.0 / s2, pwp);
    accumulate(f.im, s / s2, wp);
    accumulate(f.im, -s / s2, pw);
    return {f, f.conjugate()};
}

std::vector<SpectralIdempotent> spectral_idempotents(const WalkOperator& w) {
    const RealMatrix u = to_real(w.U);
    const auto d = sym_eig(symmetric_part(u));
    const std::size_t n = u.rows();
    std::vector<SpectralIdempotent> out;
    for (const auto& grp : d.groups()) {
        const bool plus = grp.value >= 1.0 - kSpectralTolerance;
        const bool minus = grp.value <= -1.0 + kSpectralTolerance;
        if (!plus && !minus) continue;
        out.push_back({plus ? 0.0 : M_PI, {d.projector(grp), RealMatrix(n, n, 0.0)}});
    }
    for (const auto& ev : interior_eigenvalues(w)) {
        const double theta = std::acos(2.0 * ev.mu - 1.0);
        auto [f, fbar] = complex_eigenprojection(w, ev.mu, ev.projector);
        out.push_back({theta, std::move(f)});
        out.push_back({-theta, std::move(fbar)});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.theta < y.theta; });
    return out;
}

EigenvalueSupport eigenvalue_support(const std::vector<SpectralIdempotent>& idempotents, int edge) {
    if (idempotents.empty()) throw std::invalid_argument("eigenvalue_support: no idempotents");
    const std::size_t n = idempotents.front().projector.rows();
    if (edge < 0 || static_cast<std::size_t>(edge) >= n) throw std::out_of_range("eigenvalue_support: bad edge index");
    const auto a = static_cast<std::size_t>(edge);

    std::vector<double> col(idempotents.size(), 0.0);
    std::vector<double> row(idempotents.size(), 0.0);
    for (std::size_t r = 0; r < idempotents.size(); ++r) {
        const auto& e = idempotents[r].projector;
        for (std::size_t i = 0; i < n; ++i) {
            col[r] = std::max(col[r], std::hypot(e.re(i, a), e.im(i, a)));
            row[r] = std::max(row[r], std::hypot(e.re(a, i), e.im(a, i)));
        }
    }
    EigenvalueSupport s;
    for (std::size_t r = 0; r < idempotents.size(); ++r)
        for (std::size_t t = 0; t < idempotents.size(); ++t)
            if (col[r] * row[t] > kSpectralTolerance) s.pairs.emplace_back(idempotents[r].theta, idempotents[t].theta);
    std::sort(s.pairs.begin(), s.pairs.end());
    return s;
}

EigenvalueSupport eigenvalue_support(const WalkOperator& w, int edge) {
    return eigenvalue_support(spectral_idempotents(w), edge);
}

// ---------------------------------------------------------------------------

std::vector<double> adjacency_spectrum(const Graph& g) { return sym_eig(to_double(adjacency_matrix(g))).eigenvalues; }

namespace {

int require_regular(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d) throw GraphError("graph is not regular");
    return *d;
}

}  // namespace

std::vector<double> subdivision_spectrum(const Graph& g) {
    const double d = require_regular(g);
    std::vector<double> out;
    int bottom = 0;
    for (double lambda : adjacency_spectrum(g)) {
        if (std::fabs(lambda + d) < kSpectralTolerance) {
            ++bottom;
            continue;
        }
        const double r = std::sqrt(std::max(0.0, lambda + d));
        out.push_back(r);
        out.push_back(-r);
    }
    const int zeros = g.edge_count() - g.vertex_count() + 2 * bottom;
    out.insert(out.end(), static_cast<std::size_t>(std::max(0, zeros)), 0.0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> line_graph_spectrum(const Graph& g) {
    const double d = require_regular(g);
    std::vector<double> out;
    for (double lambda : adjacency_spectrum(g)) out.push_back(lambda + d - 2.0);
    const int extra = g.edge_count() - g.vertex_count();
    if (extra >= 0) {
        out.insert(out.end(), static_cast<std::size_t>(extra), -2.0);
    } else {
        for (int k = 0; k < -extra; ++k) {
            auto it = std::find_if(out.begin(), out.end(),
                                   [](double x) { return std::fabs(x + 2.0) < kSpectralTolerance; });
            if (it == out.end()) throw std::logic_error("line_graph_spectrum: missing -2 eigenvalue");
            out.erase(it);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qwalk
