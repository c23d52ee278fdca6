#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "padicup/banach.hpp"

namespace padicup::cli {

enum class InstanceKind { hilbert, banach };

std::string to_string(InstanceKind kind);
/// Throws ParseError for anything other than "hilbert" or "banach".
InstanceKind parse_kind(std::string_view text);

/// Parsed but not yet validated instance file. All index lists are 1-based as
/// written. Every row of tau/omega is one basis vector; every row of f/g is
/// one coordinate functional (Banach files only).
struct InstanceFile {
    InstanceKind kind = InstanceKind::hilbert;
    Prime prime{2};
    std::size_t dimension = 0;
    std::vector<PVector> tau;
    std::vector<PVector> omega;
    std::vector<PVector> f;
    std::vector<PVector> g;
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> n;
    std::vector<PVector> vectors;
};

struct HilbertPair {
    OrthonormalBasis tau;
    OrthonormalBasis omega;
};

struct BanachPair {
    BiorthogonalSystem first;
    BiorthogonalSystem second;
};

struct ValidatedInstance {
    std::variant<HilbertPair, BanachPair> pair;
    IndexSubset m;
    IndexSubset n;
    std::vector<PVector> vectors;

    const Prime& prime() const;
    std::size_t dimension() const;
};

/// JSON document to InstanceFile. Syntax errors are reported as "line L,
/// column C"; shape and literal errors by field path, e.g. "omega[1][0]".
InstanceFile parse_instance(std::string_view text);

/// Deterministic JSON rendering (fixed key order, two-space indent, trailing
/// newline).
std::string serialize_instance(const InstanceFile& instance);

/// Validates the bases/systems (ValidationError listing every violation,
/// prefixed by the object name) and converts M, N to IndexSubsets.
ValidatedInstance validate_instance(const InstanceFile& instance);

/// Seeded instance: two random bases (or systems), a nonempty admissible
/// (M, N) when one exists, and three random test vectors.
InstanceFile generate_instance(Prime prime, std::size_t dimension, std::uint64_t seed, InstanceKind kind);

/// Reads a standalone vector: a JSON array of rational strings, or an
/// object with a "vectors" array (first entry used).
PVector parse_vector_document(std::string_view text, const Prime& prime, std::size_t dimension);

}  // namespace padicup::cli
