#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace braidbrick {

// Skew-symmetric integer exchange matrix. b[i][j] > 0 means b[i][j]
// arrows i -> j.
struct ExchangeMatrix {
    int size = 0;
    std::vector<std::vector<int>> b;
    bool operator==(const ExchangeMatrix&) const = default;
};

ExchangeMatrix zero_matrix(int size);
// throws std::invalid_argument unless square and skew-symmetric
void check_skew(const ExchangeMatrix& m);

ExchangeMatrix mutate(const ExchangeMatrix& m, int k);
ExchangeMatrix mutate_path(ExchangeMatrix m, const std::vector<int>& path);

bool is_acyclic(const ExchangeMatrix& m);
// sources first; ties broken by smallest vertex index; nullopt when cyclic
std::optional<std::vector<int>> topological_order(const ExchangeMatrix& m);

enum class Family { A, D, E, AffineA, AffineD, AffineE, None };

struct DynkinType {
    Family family = Family::None;
    int rank = 0;
    auto operator<=>(const DynkinType&) const = default;
};

std::string type_name(const DynkinType& t);

// Underlying-graph shape test, one entry per connected component in
// vertex order. A component that is not simply laced or not acyclic
// reports family None with its vertex count as rank.
std::vector<DynkinType> recognize(const ExchangeMatrix& m);

// Permutation-invariant key: minimal adjacency encoding over vertex
// orders compatible with an iterated neighborhood partition.
std::string canonical_form(const ExchangeMatrix& m);

std::vector<std::vector<int>> connected_components(const ExchangeMatrix& m);
ExchangeMatrix submatrix(const ExchangeMatrix& m, const std::vector<int>& verts);

struct TypeVerdict {
    enum class Kind { Finite, Infinite, Indeterminate };
    Kind kind = Kind::Indeterminate;
    // replayable certificate: mutate_path(input, path) == terminal.
    // For Finite verdicts the terminal is a disjoint union of Dynkin
    // quivers (types lists them); for Infinite it contains an entry
    // with |b_ij| >= 2.
    std::vector<int> path;
    ExchangeMatrix terminal;
    std::vector<DynkinType> types;
    // canonical forms visited across per-component searches
    std::size_t explored = 0;

    bool finite() const { return kind == Kind::Finite; }
};

// BFS over the mutation class modulo canonical_form, componentwise. An
// entry |b_ij| >= 2 certifies infinite type (simply-laced inputs stay
// simply laced exactly when the class is finite); full enumeration
// without one certifies finite type.
TypeVerdict is_finite_type(const ExchangeMatrix& m, std::size_t cap = 100000);

struct MutationClass {
    std::set<std::string> forms;
    bool complete = true;
};
MutationClass mutation_class(const ExchangeMatrix& m, std::size_t cap);

}  // namespace braidbrick
