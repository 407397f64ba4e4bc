#pragma once

#include <stdexcept>
#include <string>

namespace lsk {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad call parameters: non-coprime cable parameters, unknown catalog name,
// malformed input files.
struct invalid_params : error {
    using error::error;
};

// A polynomial that cannot be the Alexander polynomial of an L-space knot
// (asymmetric, wrong normalization, or the derived H violates growth or
// nonnegativity).
struct not_lspace_knot : error {
    using error::error;
};

// Link-level analogue: the derived two-variable H violates growth,
// nonnegativity, conjugation symmetry, or boundary stabilization.
struct not_lspace_link : error {
    using error::error;
};

// Evaluation requested off the affine lattice of the link.
struct lattice_mismatch : error {
    using error::error;
};

// det(Lambda) = 0: the surgery is not a rational homology sphere.
struct not_qhs3 : error {
    using error::error;
};

// Internal cross-checks failed (d^2 != 0, rule conflicts, derived-vs-formula
// mismatches). Signals a bug or data outside a theorem's envelope.
struct inconsistency : error {
    using error::error;
};

// No centered truncation parallelogram exists for this framing matrix.
// Mixed-sign matrices with d1*|d2| = l^2 > 0 make the two framing vectors
// exact mirror images across the s1-axis, so the four-quadrant vertex
// condition is unsatisfiable in either orientation; such inputs are flagged
// rather than computed.
struct truncation_infeasible : error {
    using error::error;
};

}  // namespace lsk
