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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/matrix.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

inline constexpr double kSpectralTolerance = 1e-8;

/// Eigen-decomposition of a real symmetric matrix.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;  // ascending
    RealMatrix vectors;               // column i pairs with eigenvalues[i]
    double tolerance = kSpectralTolerance;

    struct Group {
        double value = 0.0;  // mean of the grouped eigenvalues
        std::size_t first = 0;
        std::size_t count = 0;
    };
    /// Consecutive eigenvalues closer than tolerance share a group.
    std::vector<Group> groups() const;
    /// Orthogonal projector onto a group's eigenspace.
    RealMatrix projector(const Group& group) const;
    /// max |A - V diag(eigenvalues) V^T|
    double reconstruction_error(const RealMatrix& a) const;
};

/// Cyclic Jacobi. Deterministic for identical input bytes. Throws
/// std::invalid_argument when A is not symmetric within 1e-12.
SpectralDecomposition sym_eig(const RealMatrix& a);

/// Eigenvalues e^{+-i theta} with 0 < theta < pi, plus the real eigenvalues.
struct EigenphaseSet {
    struct Phase {
        double theta = 0.0;    // in (0, pi)
        double cosine = 0.0;   // cos(theta), the quantity computed directly
        int multiplicity = 0;  // of e^{i theta}; e^{-i theta} has the same
    };
    std::vector<Phase> phases;  // ascending by theta
    int plus_one = 0;
    int minus_one = 0;

    int dimension() const;
};

/// Phases from the adjacency spectrum of a biregular bipartite graph,
/// cos(theta) = 2 lambda^2 / (d0 d1) - 1 for each positive lambda below the
/// top; the +-1 counts come from pm1_eigenspace_dims. Throws GraphError when
/// the graph is not biregular.
EigenphaseSet walk_phases_from_graph(const Graph& g);

/// Spectrum of an orthogonal real matrix read from its symmetric part.
EigenphaseSet numeric_walk_spectrum(const RealMatrix& u);

struct EigenspaceDims {
    int plus = 0;
    int minus = 0;
};
/// plus = |E| - |C0| - |C1| + 2, minus = |C0| + |C1| - 2 rank(C), rank exact.
EigenspaceDims pm1_eigenspace_dims(const WalkOperator& w);
EigenspaceDims pm1_eigenspace_dims(const Graph& g, const Bipartition& b);

/// Complex matrix as a pair of real matrices.
struct ComplexMatrix {
    RealMatrix re;
    RealMatrix im;

    std::size_t rows() const noexcept { return re.rows(); }
    std::size_t cols() const noexcept { return re.cols(); }
    ComplexMatrix conjugate() const;
};
ComplexMatrix complex_mul(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

/// Normalized characteristic matrices: column x of P0hat is the indicator of
/// the edges at x scaled to unit length.
RealMatrix normalized_characteristic(const Graph& g, const std::vector<int>& color_class);

/// The interior eigenvalues mu of Chat Chat^T (Chat = P1hat^T P0hat), each
/// with its projector E_mu on R^{|C1|}.
struct InteriorEigenvalue {
    double mu = 0.0;
    int multiplicity = 0;
    RealMatrix projector;
};
std::vector<InteriorEigenvalue> interior_eigenvalues(const WalkOperator& w);

/// The e^{i theta} and e^{-i theta} idempotents of U for an interior mu,
/// cos(theta) = 2 mu - 1. Throws std::invalid_argument unless 0 < mu < 1
/// (within tolerance).
std::pair<ComplexMatrix, ComplexMatrix> complex_eigenprojection(const WalkOperator& w, double mu,
                                                                const RealMatrix& e_mu);

struct SpectralIdempotent {
    double theta = 0.0;  // signed, in (-pi, pi]
    ComplexMatrix projector;
};
/// All idempotents of U: the +1 and -1 projectors (when nonzero) and one
/// conjugate pair per interior mu.
std::vector<SpectralIdempotent> spectral_idempotents(const WalkOperator& w);

struct EigenvalueSupport {
    std::vector<std::pair<double, double>> pairs;  // (theta_r, theta_s), sorted
};
/// Pairs (theta_r, theta_s) with |E_r e_a e_a^T E_s|_max > 1e-8.
EigenvalueSupport eigenvalue_support(const WalkOperator& w, int edge);
EigenvalueSupport eigenvalue_support(const std::vector<SpectralIdempotent>& idempotents, int edge);

/// Numeric adjacency spectrum, ascending.
std::vector<double> adjacency_spectrum(const Graph& g);

/// Spectrum of S(g) for d-regular g: +-sqrt(lambda + d) for lambda != -d, and
/// zero filling the remaining |V| + |E| slots. Throws GraphError unless
/// regular.
std::vector<double> subdivision_spectrum(const Graph& g);
/// Spectrum of the line graph of d-regular g: lambda + d - 2, and -2 with
/// multiplicity |E| - |V| (removed when negative). Throws GraphError unless
/// regular.
std::vector<double> line_graph_spectrum(const Graph& g);

}  // namespace qwalk
