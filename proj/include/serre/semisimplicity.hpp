#pragma once

#include "serre/yd.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace serre {

enum class RadicalMethod { TraceForm, IteratedTraceForm, BruteForce };

std::string to_string(RadicalMethod method);

/// Verdict plus the Jacobson radical of the acting algebra as a certificate:
/// verdict == (radical_dim == 0), every radical element is nilpotent.
struct SemisimplicityReport {
    bool verdict = true;
    std::size_t radical_dim = 0;
    std::vector<Matrix> radical_basis;
    RadicalMethod method = RadicalMethod::TraceForm;
};

/// Default cap on the number of vectors the brute-force oracle enumerates (3^8).
inline constexpr std::uint64_t kDefaultOracleBound = 6561;

/// Canonical basis of the unital matrix algebra generated by `generators`
/// (dim x dim), obtained by spinning the identity under left multiplication
/// and echelon-reducing until stable.
std::vector<Matrix> generated_algebra(std::span<const Matrix> generators, std::size_t dim, Field field);

std::vector<Matrix> acting_algebra(const ModuleRep& module);

/// Jacobson radical of a matrix algebra given by a basis of dim x dim matrices.
///   char 0, or p > dim : kernel of the trace form (x, y) -> tr(xy)
///   p <= dim           : descending chain I_0 >= I_1 >= ... >= I_l, l = floor(log_p dim),
///                        I_i = {a in I_(i-1) : g_i(ab) = 0 for all b}, with the
///                        generalized trace g_i(a) = (tr(A^(p^i)) mod p^(i+1)) / p^i for an
///                        integer lift A of a.
/// Returns the canonical echelon basis of J.
std::vector<Matrix> jacobson_radical(std::span<const Matrix> algebra_basis, std::size_t dim, Field field,
                                     RadicalMethod* method_used = nullptr);

/// Decides complete reducibility of the space acted on by `generators`.
SemisimplicityReport semisimplicity(std::span<const Matrix> generators, std::size_t dim, Field field);

SemisimplicityReport is_semisimple(const ModuleRep& module);
/// Via comodule_to_dual_module: the comodule as a module over H*.
SemisimplicityReport is_cosemisimple(const ComoduleRep& comodule);
/// Over the algebra generated by the action matrices and coaction components.
SemisimplicityReport is_yd_semisimple(const YDModuleRep& yd);

/// Oracle straight from the definition: enumerates every invariant subspace
/// (cyclic subspaces of all vectors, closed under sums) and requires each one
/// to have an invariant complement. F_p only. Throws BoundExceeded when
/// p^dim > bound and std::invalid_argument over Q.
bool brute_force_semisimple(std::span<const Matrix> generators, std::size_t dim, Field field,
                            std::uint64_t bound = kDefaultOracleBound);

bool brute_force_semisimple(const ModuleRep& module, std::uint64_t bound = kDefaultOracleBound);
bool brute_force_cosemisimple(const ComoduleRep& comodule, std::uint64_t bound = kDefaultOracleBound);
bool brute_force_yd_semisimple(const YDModuleRep& yd, std::uint64_t bound = kDefaultOracleBound);

/// True when p^dim <= bound (always false over Q).
bool oracle_applicable(Field field, std::size_t dim, std::uint64_t bound = kDefaultOracleBound);

/// Number of invariant subspaces found by the oracle (including 0 and the whole space).
std::size_t count_invariant_subspaces(std::span<const Matrix> generators, std::size_t dim, Field field,
                                      std::uint64_t bound = kDefaultOracleBound);

} // namespace serre
