#pragma once

#include <map>
#include <memory>
#include <string>

#include "bp/field.hpp"
#include "bp/symbol.hpp"

namespace bp {

/// One discrete system A u = f with the splitting A = L_ref - V and the
/// fast Green operator G = L_ref^{-1} applied through the reference
/// symbol. Implementations are immutable after construction; all apply_*
/// calls are reentrant.
class Problem {
  public:
    virtual ~Problem() = default;

    const GridSpec& grid() const { return grid_; }
    TransformKind kind() const { return symbol_.kind; }
    const SpectralSymbol& reference_symbol() const { return symbol_; }

    virtual std::string family() const = 0;

    virtual ComplexField apply_A(const ComplexField& u) const = 0;
    virtual ComplexField apply_V(const ComplexField& u) const = 0;
    virtual ComplexField apply_V_adjoint(const ComplexField& u) const = 0;

    /// A^H u. Default: L_ref^H u - V^H u via the conjugated symbol.
    virtual ComplexField apply_A_adjoint(const ComplexField& u) const;

    ComplexField apply_Lref(const ComplexField& u) const;
    ComplexField apply_G(const ComplexField& q) const;
    ComplexField apply_G_adjoint(const ComplexField& q) const;

    /// Born residual for iterate u and source f:
    /// r_bs = G(V u + f) - u, one Green application.
    ComplexField born_residual(const ComplexField& u, const ComplexField& f) const;

    virtual std::map<std::string, std::string> metadata() const;

  protected:
    Problem(GridSpec grid, SpectralSymbol symbol);
    void check_grid(const ComplexField& u) const;

    GridSpec grid_;
    SpectralSymbol symbol_;
};

using ProblemPtr = std::shared_ptr<const Problem>;

}  // namespace bp
