#include "padicup/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "padicup/errors.hpp"
#include "padicup/random.hpp"
#include "padicup/scan.hpp"

namespace padicup::cli {

namespace {

struct LoadFailure {
    int code;
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Loads and validates, printing diagnostics; throws LoadFailure with the exit code.
ValidatedInstance load(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
    InstanceFile file;
    try {
        file = parse_instance(read_file(path));
    } catch (const ParseError& e) {
        err << path.string() << ": parse error: " << e.what() << "\n";
        throw LoadFailure{exit_parse_error};
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        throw LoadFailure{exit_parse_error};
    }
    try {
        return validate_instance(file);
    } catch (const ValidationError& e) {
        out << path.string() << ": INVALID " << to_string(file.kind) << " instance\n";
        for (const auto& v : e.violations())
            out << "  - " << v << "\n";
        throw LoadFailure{exit_invalid};
    }
}

std::string exponent_field(const UltraNorm& n) { return n.is_zero() ? "-inf" : std::to_string(n.exponent()); }

std::string format_report(const UncertaintyReport& r, const Prime& p) {
    std::ostringstream s;
    s << "coherence=" << r.coherence.to_string(p) << " constant=" << r.bound_constant.to_string()
      << " lhs=" << r.lhs_norm.to_string(p) << " rhs=" << r.rhs_value.to_string()
      << " pnvpm=" << r.operator_norm_pnvpm.to_string(p) << " holds=" << (r.holds ? "true" : "false");
    return s.str();
}

std::vector<PVector> select_vectors(const ValidatedInstance& inst, const CheckOptions& options) {
    const std::size_t n = inst.dimension();
    if (options.vector) {
        const std::string& arg = *options.vector;
        if (!arg.empty() && std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            const std::size_t idx = std::stoul(arg);
            if (idx < 1 || idx > inst.vectors.size())
                throw ParseError("--vector", "index " + arg + " outside 1.." + std::to_string(inst.vectors.size()));
            return {inst.vectors[idx - 1]};
        }
        return {parse_vector_document(read_file(arg), inst.prime(), n)};
    }
    if (!inst.vectors.empty())
        return inst.vectors;
    std::vector<PVector> canonical;
    for (std::size_t j = 0; j < n; ++j)
        canonical.push_back(PVector::unit(inst.prime(), n, j));
    return canonical;
}

SubsetScanner make_scanner(const ValidatedInstance& inst) {
    if (const auto* h = std::get_if<HilbertPair>(&inst.pair))
        return SubsetScanner::hilbert(h->tau, h->omega);
    const auto& b = std::get<BanachPair>(inst.pair);
    return SubsetScanner::banach(b.first, b.second);
}

int check_all_subsets(const ValidatedInstance& inst, const std::vector<PVector>& vectors, std::ostream& out) {
    const SubsetScanner scan = make_scanner(inst);
    const std::size_t n = scan.size();
    const Prime& p = scan.prime();
    bool falsified = false;
    for (std::size_t v = 0; v < vectors.size(); ++v) {
        const auto profile = scan.profile(vectors[v]);
        std::uint64_t admissible = 0;
        std::uint64_t violations = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const std::uint64_t partners = scan.admissible_partners(m);
            for (std::uint64_t sub = partners;; sub = (sub - 1) & partners) {
                const auto r = scan.evaluate(m, sub, profile);
                ++admissible;
                if (!r.holds) {
                    ++violations;
                    if (violations <= 20)
                        out << "  VIOLATION x" << v + 1 << " M=" << IndexSubset::from_mask(n, m).to_string()
                            << " N=" << IndexSubset::from_mask(n, sub).to_string()
                            << " coherence=" << r.coherence.to_string(p) << " lhs=" << r.lhs_norm.to_string(p)
                            << " rhs=" << r.rhs_value.to_string() << "\n";
                }
                if (sub == 0)
                    break;
            }
        }
        out << "x" << v + 1 << ": " << admissible << " admissible (M,N) pairs, " << violations << " violations\n";
        falsified = falsified || violations > 0;
    }
    return falsified ? exit_theorem_falsified : exit_ok;
}

int check_given_subsets(const ValidatedInstance& inst, const std::vector<PVector>& vectors, std::ostream& out) {
    const Prime& p = inst.prime();
    const auto* hilbert = std::get_if<HilbertPair>(&inst.pair);
    const auto* banach = std::get_if<BanachPair>(&inst.pair);
    bool falsified = false;
    try {
        for (std::size_t v = 0; v < vectors.size(); ++v) {
            const UncertaintyReport r =
                hilbert ? check_uncertainty(hilbert->tau, hilbert->omega, inst.m, inst.n, vectors[v])
                        : check_nonarch_uncertainty(banach->first, banach->second, inst.m, inst.n, vectors[v]);
            out << "x" << v + 1 << ": " << format_report(r, p) << "\n";
            falsified = falsified || !r.holds;
        }
        const bool annihilates = hilbert ? support_annihilation_check(hilbert->tau, hilbert->omega, inst.m, inst.n)
                                         : banach_support_annihilation(banach->first, banach->second, inst.m, inst.n);
        out << "support annihilation: " << (annihilates ? "true" : "false") << "\n";
        falsified = falsified || !annihilates;
    } catch (const HypothesisViolated& e) {
        out << "hypothesis violated: coherence=" << e.coherence().to_string(p) << " is not below 1 for M="
            << inst.m.to_string() << " N=" << inst.n.to_string() << "\n";
        return exit_hypothesis_violated;
    }
    return falsified ? exit_theorem_falsified : exit_ok;
}

// One (prime, dimension, seed) job of the sweep: CSV rows plus a violation flag.
struct SweepChunk {
    std::string rows;
    bool violated = false;
    std::string error;
};

SweepChunk sweep_instance(const Prime& prime, std::size_t dim, std::uint64_t seed, InstanceKind kind,
                          std::size_t draws) {
    SweepChunk chunk;
    const ValidatedInstance inst = validate_instance(generate_instance(prime, dim, seed, kind));
    const SubsetScanner scan = make_scanner(inst);
    const auto* hilbert = std::get_if<HilbertPair>(&inst.pair);
    const auto* banach = std::get_if<BanachPair>(&inst.pair);

    Rng rng(derive_seed(seed, 4));
    std::vector<PVector> xs;
    std::vector<SubsetScanner::Profile> profiles;
    std::vector<std::pair<std::string, std::string>> entropies;
    while (xs.size() < draws) {
        PVector x = random_vector(rng, prime, dim);
        if (x.is_zero())
            continue;
        x = prime_power(prime, sup_norm(x).exponent()) * x;
        std::pair<std::string, std::string> e{"NA", "NA"};
        if (hilbert) {
            const auto entropy = [&x](const OrthonormalBasis& b) {
                try {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.17g", padic_shannon_entropy(b, x));
                    return std::string(buf);
                } catch (const MembershipError&) {
                    return std::string("NA");
                }
            };
            e = {entropy(hilbert->tau), entropy(hilbert->omega)};
        }
        profiles.push_back(scan.profile(x));
        entropies.push_back(std::move(e));
        xs.push_back(std::move(x));
    }

    const auto subset_field = [dim](std::uint64_t mask) {
        std::string s = "{";
        bool first = true;
        for (std::size_t i = 0; i < dim; ++i)
            if (mask >> i & 1) {
                s += (first ? "" : ";") + std::to_string(i + 1);
                first = false;
            }
        return s + "}";
    };

    std::ostringstream rows;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << dim); ++m) {
        const std::uint64_t partners = scan.admissible_partners(m);
        for (std::uint64_t sub = partners;; sub = (sub - 1) & partners) {
            const IndexSubset ms = IndexSubset::from_mask(dim, m);
            const IndexSubset ns = IndexSubset::from_mask(dim, sub);
            const UltraNorm pnvpm =
                hilbert ? pnvpm_norm(hilbert->tau, hilbert->omega, ms, ns) : pnvpm_norm(banach->first, banach->second, ms, ns);
            for (std::size_t d = 0; d < xs.size(); ++d) {
                const auto r = scan.evaluate(m, sub, profiles[d]);
                const ExactRational ratio = r.rhs_value / ultranorm_to_rational(r.lhs_norm, prime);
                rows << prime.value() << ',' << dim << ',' << seed << ',' << subset_field(m) << ','
                     << subset_field(sub) << ',' << exponent_field(r.coherence) << ','
                     << r.bound_constant.numerator().get_str() << ',' << r.bound_constant.denominator().get_str()
                     << ',' << exponent_field(r.lhs_norm) << ',' << r.rhs_value.numerator().get_str() << ','
                     << r.rhs_value.denominator().get_str() << ',' << ratio.to_string() << ','
                     << (r.holds ? "true" : "false") << ',' << entropies[d].first << ',' << entropies[d].second
                     << ',' << exponent_field(pnvpm) << '\n';
                if (!r.holds)
                    chunk.violated = true;
            }
            if (sub == 0)
                break;
        }
    }
    chunk.rows = rows.str();
    return chunk;
}

}  // namespace

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
    try {
        const ValidatedInstance inst = load(path, out, err);
        const bool hilbert = std::holds_alternative<HilbertPair>(inst.pair);
        out << path.string() << ": valid " << (hilbert ? "hilbert" : "banach") << " instance (prime "
            << inst.prime().value() << ", dimension " << inst.dimension() << ", M=" << inst.m.to_string()
            << ", N=" << inst.n.to_string() << ", " << inst.vectors.size() << " vectors)\n";
        if (hilbert) {
            out << "  tau: orthonormal basis\n  omega: orthonormal basis\n";
        } else {
            out << "  (f, tau): orthonormal biorthogonal system\n  (g, omega): orthonormal biorthogonal system\n";
        }
        return exit_ok;
    } catch (const LoadFailure& f) {
        return f.code;
    }
}

int cmd_check(const std::filesystem::path& path, const CheckOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const ValidatedInstance inst = load(path, out, err);
        std::vector<PVector> vectors;
        try {
            vectors = select_vectors(inst, options);
        } catch (const std::runtime_error& e) {
            err << "vector selection failed: " << e.what() << "\n";
            return exit_parse_error;
        }
        const bool hilbert = std::holds_alternative<HilbertPair>(inst.pair);
        out << (hilbert ? "hilbert" : "banach") << " instance p=" << inst.prime().value()
            << " n=" << inst.dimension();
        if (options.all_subsets) {
            if (inst.dimension() > kMaxAllSubsetsDimension) {
                out << "\n";
                err << "--all-subsets supports dimension <= " << kMaxAllSubsetsDimension << "\n";
                return exit_parse_error;
            }
            out << " all admissible (M,N)\n";
            return check_all_subsets(inst, vectors, out);
        }
        out << " M=" << inst.m.to_string() << " N=" << inst.n.to_string() << "\n";
        return check_given_subsets(inst, vectors, out);
    } catch (const LoadFailure& f) {
        return f.code;
    }
}

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err) {
    if (!is_prime(options.prime)) {
        err << "--prime " << options.prime << " is not prime\n";
        return exit_parse_error;
    }
    if (options.dimension == 0) {
        err << "--dim must be at least 1\n";
        return exit_parse_error;
    }
    InstanceKind kind;
    try {
        kind = parse_kind(options.kind);
    } catch (const ParseError& e) {
        err << "--kind: " << e.what() << "\n";
        return exit_parse_error;
    }
    out << serialize_instance(generate_instance(Prime(options.prime), options.dimension, options.seed, kind));
    return exit_ok;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto parse = [&text](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw ParseError("--seeds", "expected \"a..b\" or an integer, found \"" + text + "\"");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse(text);
        return {v, v};
    }
    const auto lo = parse(std::string_view(text).substr(0, dots));
    const auto hi = parse(std::string_view(text).substr(dots + 2));
    if (hi < lo)
        throw ParseError("--seeds", "empty range \"" + text + "\"");
    return {lo, hi};
}

std::string sweep_csv_header() {
    return "prime,dim,seed,M,N,coherence_exp,constant_num,constant_den,lhs_exp,rhs_num,rhs_den,ratio,holds,"
           "entropy_tau,entropy_omega,pnvpm_exp";
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
    InstanceKind kind;
    try {
        kind = parse_kind(options.kind);
    } catch (const ParseError& e) {
        err << "--kind: " << e.what() << "\n";
        return exit_parse_error;
    }
    for (auto p : options.primes)
        if (!is_prime(p)) {
            err << "--primes: " << p << " is not prime\n";
            return exit_parse_error;
        }
    for (auto d : options.dimensions)
        if (d == 0 || d > kMaxSweepDimension) {
            err << "--dims: dimension " << d << " outside 1.." << kMaxSweepDimension << "\n";
            return exit_parse_error;
        }
    if (options.last_seed < options.first_seed) {
        err << "--seeds: empty range\n";
        return exit_parse_error;
    }

    struct Job {
        Prime prime;
        std::size_t dim;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (auto p : options.primes)
        for (auto d : options.dimensions)
            for (std::uint64_t s = options.first_seed;; ++s) {
                jobs.push_back({Prime(p), d, s});
                if (s == options.last_seed)
                    break;
            }

    const unsigned workers =
        std::max(1u, options.threads ? options.threads : std::thread::hardware_concurrency());
    std::vector<SweepChunk> results(jobs.size());
    for (std::size_t begin = 0; begin < jobs.size(); begin += workers) {
        const std::size_t end = std::min(jobs.size(), begin + workers);
        std::vector<std::future<SweepChunk>> pending;
        for (std::size_t i = begin; i < end; ++i)
            pending.push_back(std::async(std::launch::async, [&, i] {
                try {
                    return sweep_instance(jobs[i].prime, jobs[i].dim, jobs[i].seed, kind, options.draws);
                } catch (const std::exception& e) {
                    SweepChunk failed;
                    failed.error = e.what();
                    return failed;
                }
            }));
        for (std::size_t i = begin; i < end; ++i)
            results[i] = pending[i - begin].get();
    }

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!results[i].error.empty()) {
            err << "sweep failed for prime " << jobs[i].prime.value() << ", dim " << jobs[i].dim << ", seed "
                << jobs[i].seed << ": " << results[i].error << "\n";
            return exit_parse_error;
        }
        if (results[i].violated) {
            err << "INEQUALITY VIOLATED for prime " << jobs[i].prime.value() << ", dim " << jobs[i].dim
                << ", seed " << jobs[i].seed << "\n";
            return exit_theorem_falsified;
        }
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (options.output != "-") {
        file.open(options.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "cannot write " << options.output.string() << "\n";
            return exit_parse_error;
        }
        sink = &file;
    }
    *sink << sweep_csv_header() << '\n';
    for (const auto& r : results)
        *sink << r.rows;
    sink->flush();
    if (!*sink) {
        err << "write error on " << options.output.string() << "\n";
        return exit_parse_error;
    }
    return exit_ok;
}

}  // namespace padicup::cli
