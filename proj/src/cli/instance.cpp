#include "padicup/cli/instance.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <type_traits>

#include "json.hpp"

#include "padicup/errors.hpp"
#include "padicup/random.hpp"
#include "padicup/scan.hpp"

namespace padicup::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

ExactRational parse_entry(const json& value, const std::string& where) {
    if (value.is_number_integer())
        return ExactRational(value.get<long>());
    if (!value.is_string())
        throw ParseError(where, "expected a rational string such as \"3/5\"");
    try {
        return ExactRational::parse(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where, e.what());
    }
}

PVector parse_row(const json& value, const std::string& where, const Prime& prime, std::size_t dimension) {
    if (!value.is_array())
        throw ParseError(where, "expected an array of " + std::to_string(dimension) + " rationals");
    if (value.size() != dimension)
        throw ParseError(where, "expected " + std::to_string(dimension) + " entries, found " +
                                    std::to_string(value.size()));
    std::vector<ExactRational> entries;
    entries.reserve(dimension);
    for (std::size_t i = 0; i < value.size(); ++i)
        entries.push_back(parse_entry(value[i], where + "[" + std::to_string(i) + "]"));
    return PVector(prime, std::move(entries));
}

std::vector<PVector> parse_matrix(const json& doc, const std::string& key, const Prime& prime,
                                  std::size_t dimension) {
    if (!doc.contains(key))
        throw ParseError(key, "missing required field");
    const json& value = doc.at(key);
    if (!value.is_array() || value.size() != dimension)
        throw ParseError(key, "expected an array of " + std::to_string(dimension) + " rows");
    std::vector<PVector> rows;
    rows.reserve(dimension);
    for (std::size_t i = 0; i < dimension; ++i)
        rows.push_back(parse_row(value[i], key + "[" + std::to_string(i) + "]", prime, dimension));
    return rows;
}

std::vector<std::int64_t> parse_indices(const json& doc, const std::string& key, std::size_t dimension) {
    if (!doc.contains(key))
        throw ParseError(key, "missing required field");
    const json& value = doc.at(key);
    if (!value.is_array())
        throw ParseError(key, "expected an array of 1-based indices");
    std::vector<std::int64_t> out;
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string where = key + "[" + std::to_string(i) + "]";
        if (!value[i].is_number_integer())
            throw ParseError(where, "expected an integer index");
        const auto idx = value[i].get<std::int64_t>();
        if (idx < 1 || static_cast<std::size_t>(idx) > dimension)
            throw ParseError(where, "index " + std::to_string(idx) + " outside 1.." + std::to_string(dimension));
        if (!seen.insert(idx).second)
            throw ParseError(where, "repeated index " + std::to_string(idx));
        out.push_back(idx);
    }
    return out;
}

ordered_json render_rows(const std::vector<PVector>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row.entries())
            r.push_back(x.to_string());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PVector> columns_of(const PMatrix& m) {
    std::vector<PVector> out;
    for (std::size_t j = 0; j < m.size(); ++j)
        out.push_back(m.column(j));
    return out;
}

std::vector<PVector> rows_of(const PMatrix& m) {
    std::vector<PVector> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        out.push_back(m.row(i));
    return out;
}

std::vector<std::int64_t> one_based(std::uint64_t mask, std::size_t n) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
            out.push_back(static_cast<std::int64_t>(i + 1));
    return out;
}

// Grows a single admissible cross pair (j, k) greedily: first N, then M.
void pick_subsets(const SubsetScanner& scan, InstanceFile& out) {
    const std::size_t n = scan.size();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (scan.cross(j, k) >= UltraNorm::one())
                continue;
            std::uint64_t m_mask = std::uint64_t{1} << j;
            std::uint64_t n_mask = scan.admissible_partners(m_mask);
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                const std::uint64_t grown = m_mask | (std::uint64_t{1} << j2);
                if ((scan.admissible_partners(grown) & n_mask) == n_mask)
                    m_mask = grown;
            }
            out.m = one_based(m_mask, n);
            out.n = one_based(n_mask, n);
            return;
        }
    out.m = {};
    out.n = {1};
}

}  // namespace

std::string to_string(InstanceKind kind) { return kind == InstanceKind::hilbert ? "hilbert" : "banach"; }

InstanceKind parse_kind(std::string_view text) {
    if (text == "hilbert")
        return InstanceKind::hilbert;
    if (text == "banach")
        return InstanceKind::banach;
    throw ParseError("kind", "expected \"hilbert\" or \"banach\", found \"" + std::string(text) + "\"");
}

const Prime& ValidatedInstance::prime() const {
    return std::visit(
        [](const auto& p) -> const Prime& {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, HilbertPair>)
                return p.tau.prime();
            else
                return p.first.prime();
        },
        pair);
}

std::size_t ValidatedInstance::dimension() const { return m.ambient(); }

InstanceFile parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_column(text, e.byte), "invalid JSON");
    }
    if (!doc.is_object())
        throw ParseError("", "instance must be a JSON object");

    static const std::set<std::string> known{"kind", "prime", "dimension", "tau", "omega", "f",
                                             "g",    "M",     "N",         "vectors"};
    for (const auto& item : doc.items())
        if (!known.contains(item.key()))
            throw ParseError(item.key(), "unknown field");

    InstanceFile out;
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("kind", "missing or not a string");
    out.kind = parse_kind(doc["kind"].get<std::string>());

    if (!doc.contains("prime") || !doc["prime"].is_number_unsigned())
        throw ParseError("prime", "missing or not a positive integer");
    const auto p = doc["prime"].get<std::uint64_t>();
    if (!is_prime(p))
        throw ParseError("prime", std::to_string(p) + " is not prime");
    out.prime = Prime(p);

    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() || doc["dimension"].get<std::uint64_t>() == 0)
        throw ParseError("dimension", "missing or not a positive integer");
    out.dimension = doc["dimension"].get<std::size_t>();

    out.tau = parse_matrix(doc, "tau", out.prime, out.dimension);
    out.omega = parse_matrix(doc, "omega", out.prime, out.dimension);
    if (out.kind == InstanceKind::banach) {
        out.f = parse_matrix(doc, "f", out.prime, out.dimension);
        out.g = parse_matrix(doc, "g", out.prime, out.dimension);
    } else if (doc.contains("f") || doc.contains("g")) {
        throw ParseError(doc.contains("f") ? "f" : "g", "functionals are only allowed for kind \"banach\"");
    }
    out.m = parse_indices(doc, "M", out.dimension);
    out.n = parse_indices(doc, "N", out.dimension);

    if (doc.contains("vectors")) {
        const json& vs = doc["vectors"];
        if (!vs.is_array())
            throw ParseError("vectors", "expected an array of vectors");
        for (std::size_t i = 0; i < vs.size(); ++i)
            out.vectors.push_back(parse_row(vs[i], "vectors[" + std::to_string(i) + "]", out.prime, out.dimension));
    }
    return out;
}

std::string serialize_instance(const InstanceFile& instance) {
    ordered_json doc;
    doc["kind"] = to_string(instance.kind);
    doc["prime"] = instance.prime.value();
    doc["dimension"] = instance.dimension;
    doc["tau"] = render_rows(instance.tau);
    doc["omega"] = render_rows(instance.omega);
    if (instance.kind == InstanceKind::banach) {
        doc["f"] = render_rows(instance.f);
        doc["g"] = render_rows(instance.g);
    }
    doc["M"] = instance.m;
    doc["N"] = instance.n;
    doc["vectors"] = render_rows(instance.vectors);
    return doc.dump(2) + "\n";
}

ValidatedInstance validate_instance(const InstanceFile& instance) {
    std::vector<std::string> violations;
    const auto collect = [&violations](const std::string& name, auto&& build) {
        using Result = decltype(build());
        try {
            return std::optional<Result>(build());
        } catch (const ValidationError& e) {
            for (const auto& v : e.violations())
                violations.push_back(name + ": " + v);
            return std::optional<Result>();
        }
    };

    const std::size_t n = instance.dimension;
    IndexSubset m = IndexSubset::from_one_based(n, instance.m);
    IndexSubset nn = IndexSubset::from_one_based(n, instance.n);

    if (instance.kind == InstanceKind::hilbert) {
        auto tau = collect("tau", [&] { return validate_onb(instance.prime, instance.tau); });
        auto omega = collect("omega", [&] { return validate_onb(instance.prime, instance.omega); });
        if (!violations.empty())
            throw ValidationError(std::move(violations));
        return ValidatedInstance{HilbertPair{std::move(*tau), std::move(*omega)}, std::move(m), std::move(nn),
                                 instance.vectors};
    }
    auto first = collect("(f, tau)", [&] {
        return validate_system(instance.prime, PMatrix::from_columns(instance.tau), PMatrix::from_rows(instance.f));
    });
    auto second = collect("(g, omega)", [&] {
        return validate_system(instance.prime, PMatrix::from_columns(instance.omega), PMatrix::from_rows(instance.g));
    });
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return ValidatedInstance{BanachPair{std::move(*first), std::move(*second)}, std::move(m), std::move(nn),
                             instance.vectors};
}

InstanceFile generate_instance(Prime prime, std::size_t dimension, std::uint64_t seed, InstanceKind kind) {
    InstanceFile out;
    out.kind = kind;
    out.prime = prime;
    out.dimension = dimension;
    if (kind == InstanceKind::hilbert) {
        const auto tau = random_onb(prime, dimension, derive_seed(seed, 1));
        const auto omega = random_onb(prime, dimension, derive_seed(seed, 2));
        out.tau = tau.vectors();
        out.omega = omega.vectors();
        if (dimension <= 63)
            pick_subsets(SubsetScanner::hilbert(tau, omega), out);
    } else {
        const auto first = random_system(prime, dimension, derive_seed(seed, 1));
        const auto second = random_system(prime, dimension, derive_seed(seed, 2));
        out.tau = columns_of(first.basis_matrix());
        out.omega = columns_of(second.basis_matrix());
        out.f = rows_of(first.functional_matrix());
        out.g = rows_of(second.functional_matrix());
        if (dimension <= 63)
            pick_subsets(SubsetScanner::banach(first, second), out);
    }
    Rng rng(derive_seed(seed, 3));
    for (int i = 0; i < 3; ++i)
        out.vectors.push_back(random_vector(rng, prime, dimension));
    return out;
}

PVector parse_vector_document(std::string_view text, const Prime& prime, std::size_t dimension) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_column(text, e.byte), "invalid JSON");
    }
    if (doc.is_object()) {
        if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty())
            throw ParseError("vectors", "expected a nonempty array of vectors");
        return parse_row(doc["vectors"][0], "vectors[0]", prime, dimension);
    }
    return parse_row(doc, "vector", prime, dimension);
}

}  // namespace padicup::cli
