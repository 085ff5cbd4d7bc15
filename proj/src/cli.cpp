#include "pauliray/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pauliray/census.hpp"
#include "pauliray/geometry.hpp"
#include "pauliray/lattice.hpp"
#include "pauliray/reference.hpp"

namespace pauliray {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::uint32_t qubits = 4;
    std::string system = "mermin-square";
    std::string format = "table";
    std::string out_path;
    std::string suite = "all";
    std::string what = "rays";
    bool long_running = false;
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

SystemKind parse_system(const std::string& name) {
    if (name == "mermin-square") return SystemKind::MerminSquare;
    if (name == "mermin-pentagram") return SystemKind::MerminPentagram;
    throw PreconditionError("unknown system: " + name);
}

std::string histogram_text(const DistanceHistogram& hist) {
    std::string text;
    for (const auto& [d2, count] : hist) {
        if (!text.empty()) text += "  ";
        text += d2.to_string() + ":" + std::to_string(count);
    }
    return text.empty() ? "-" : text;
}

ordered_json histogram_json(const DistanceHistogram& hist) {
    ordered_json arr = ordered_json::array();
    for (const auto& [d2, count] : hist) arr.push_back({{"d2", d2.to_string()}, {"count", count}});
    return arr;
}

// ----------------------------------------------------------------- counts

struct CountsLine {
    std::uint32_t m = 0, dim = 0;
    std::uint64_t mcs = 0, rays = 0, real_rays = 0;
    std::string clifford;
    std::string graph_aut;  // "-" when not computed
    bool pass = true;
    std::string note;
};

int cmd_counts(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    if (cfg.qubits > 5) {
        err << "error: counts supports up to 5 qubits\n";
        return 2;
    }
    if (cfg.qubits >= 5 && !cfg.long_running) {
        err << "error: counts for 5 qubits requires --long-running\n";
        return 2;
    }
    std::vector<CountsLine> lines;
    for (std::uint32_t m = 1; m <= cfg.qubits; ++m) {
        CountsLine line;
        line.m = m;
        line.dim = 1u << m;
        RayCounts rc = ray_counts(m, cfg.threads);
        line.mcs = rc.mcs;
        line.rays = rc.rays;
        line.real_rays = rc.real_rays;
        BigUint formula = clifford_order(m);
        line.clifford = formula.to_string();

        const bool compute_aut = m <= 3 || (m == 4 && cfg.long_running);
        BigUint aut;
        if (compute_aut) {
            RayCatalog real = real_rays(all_rays(m, cfg.threads));
            aut = automorphism_order(build_graph(real, cfg.threads));
            line.graph_aut = aut.to_string();
        } else {
            line.graph_aut = "-";
        }

        const reference::CountsRow& expected =
            m <= 4 ? reference::counts_rows[m - 1] : reference::counts_row_m5;
        line.pass = line.mcs == expected.mcs && line.rays == expected.rays &&
                    line.real_rays == expected.real_rays;
        if (m <= 4) {
            line.pass = line.pass && formula == expected.aut_order;
            if (compute_aut) line.pass = line.pass && aut == expected.aut_order;
        } else {
            line.note = "symmetry order published only approximately (~4.8e15); the order "
                        "formula gives " +
                        line.clifford + " (~4.8e16); counts scored, order not";
        }
        lines.push_back(std::move(line));
    }

    bool all_pass = std::all_of(lines.begin(), lines.end(),
                                [](const CountsLine& l) { return l.pass; });
    if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "counts";
        doc["rows"] = ordered_json::array();
        for (const auto& l : lines) {
            ordered_json row;
            row["m"] = l.m;
            row["dimension"] = l.dim;
            row["mcs"] = l.mcs;
            row["rays"] = l.rays;
            row["real_rays"] = l.real_rays;
            row["clifford_order"] = l.clifford;
            row["graph_aut"] = l.graph_aut;
            row["pass"] = l.pass;
            if (!l.note.empty()) row["note"] = l.note;
            doc["rows"].push_back(std::move(row));
        }
        doc["all_passed"] = all_pass;
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "m,dimension,mcs,rays,real_rays,clifford_order,graph_aut,status\n";
        for (const auto& l : lines)
            os << l.m << "," << l.dim << "," << l.mcs << "," << l.rays << "," << l.real_rays
               << "," << l.clifford << "," << l.graph_aut << ","
               << (l.pass ? "PASS" : "FAIL") << "\n";
    } else {
        os << std::left << std::setw(3) << "m" << std::right << std::setw(5) << "dim"
           << std::setw(8) << "mcs" << std::setw(10) << "rays" << std::setw(11) << "real"
           << std::setw(20) << "clifford-order" << std::setw(16) << "graph-aut"
           << "  status\n";
        for (const auto& l : lines) {
            os << std::left << std::setw(3) << l.m << std::right << std::setw(5) << l.dim
               << std::setw(8) << l.mcs << std::setw(10) << l.rays << std::setw(11)
               << l.real_rays << std::setw(20) << l.clifford << std::setw(16) << l.graph_aut
               << "  " << (l.pass ? "PASS" : "FAIL") << "\n";
            if (!l.note.empty()) os << "    note: " << l.note << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- census

struct CensusExpectation {
    const reference::CensusRow* rows = nullptr;
    std::size_t row_count = 0;
    const Rational* distances = nullptr;
    std::size_t distance_count = 0;
    std::uint32_t ray_count = 0, basis_count = 0, kernel_dimension = 0;
};

CensusExpectation expectation_for(SystemKind kind) {
    CensusExpectation e;
    if (kind == SystemKind::MerminSquare) {
        e.rows = reference::square_census.data();
        e.row_count = reference::square_census.size();
        e.distances = reference::square_distances.data();
        e.distance_count = reference::square_distances.size();
        e.ray_count = reference::square_ray_count;
        e.basis_count = reference::square_basis_count;
        e.kernel_dimension = reference::square_kernel_dimension;
    } else {
        e.rows = reference::pentagram_census.data();
        e.row_count = reference::pentagram_census.size();
        e.distances = reference::pentagram_distances.data();
        e.distance_count = reference::pentagram_distances.size();
        e.ray_count = reference::pentagram_ray_count;
        e.basis_count = reference::pentagram_basis_count;
        e.kernel_dimension = reference::pentagram_kernel_dimension;
    }
    return e;
}

DistanceHistogram expected_histogram(const reference::CensusRow& row, const CensusExpectation& e) {
    DistanceHistogram hist;
    for (std::size_t i = 0; i < e.distance_count; ++i)
        if (row.histogram[i] != 0) hist[e.distances[i]] = row.histogram[i];
    return hist;
}

int cmd_census(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    if (cfg.format == "dot") {
        err << "error: census has no dot representation\n";
        return 2;
    }
    SystemKind kind = parse_system(cfg.system);
    CensusExpectation expected = expectation_for(kind);

    ProofSystem system = build_system(kind, cfg.threads);
    Census census = enumerate_parity_proofs(system, cfg.threads);
    std::uint32_t kernel_dim = parity_kernel(system.matrix).dimension;

    bool all_pass = system.catalog.size() == expected.ray_count &&
                    system.bases.size() == expected.basis_count &&
                    kernel_dim == expected.kernel_dimension &&
                    census.classes.size() == expected.row_count;
    std::vector<bool> row_pass(census.classes.size(), false);
    for (std::size_t i = 0; i < census.classes.size(); ++i) {
        const ProofClass& cls = census.classes[i];
        bool ok = i < expected.row_count;
        if (ok) {
            const reference::CensusRow& row = expected.rows[i];
            ok = cls.label == row.label && cls.v == row.v && cls.l == row.l &&
                 cls.proofs.size() == row.proofs &&
                 cls.histogram == expected_histogram(row, expected);
        }
        row_pass[i] = ok;
        all_pass = all_pass && ok;
    }

    if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "census";
        doc["system"] = cfg.system;
        doc["ray_count"] = system.catalog.size();
        doc["basis_count"] = system.bases.size();
        doc["kernel_dimension"] = kernel_dim;
        doc["total_proofs"] = census.total();
        doc["classes"] = ordered_json::array();
        for (std::size_t i = 0; i < census.classes.size(); ++i) {
            const ProofClass& cls = census.classes[i];
            ordered_json jc;
            jc["label"] = cls.label;
            jc["v"] = cls.v;
            jc["l"] = cls.l;
            jc["count"] = cls.proofs.size();
            jc["histogram"] = histogram_json(cls.histogram);
            jc["pass"] = (bool)row_pass[i];
            ordered_json proofs = ordered_json::array();
            for (const ParityProof& p : cls.proofs) proofs.push_back(p.basis_ids);
            jc["proofs"] = std::move(proofs);
            doc["classes"].push_back(std::move(jc));
        }
        doc["all_passed"] = all_pass;
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "class,v,l,proofs";
        for (std::size_t i = 0; i < expected.distance_count; ++i)
            os << "," << expected.distances[i].to_string();
        os << ",status\n";
        for (std::size_t i = 0; i < census.classes.size(); ++i) {
            const ProofClass& cls = census.classes[i];
            os << cls.label << "," << cls.v << "," << cls.l << "," << cls.proofs.size();
            for (std::size_t d = 0; d < expected.distance_count; ++d) {
                auto it = cls.histogram.find(expected.distances[d]);
                os << "," << (it == cls.histogram.end() ? 0 : it->second);
            }
            os << "," << (row_pass[i] ? "PASS" : "FAIL") << "\n";
        }
    } else {
        os << cfg.system << ": " << system.catalog.size() << " rays, " << system.bases.size()
           << " bases, kernel dimension " << kernel_dim << ", " << census.total()
           << " parity proofs\n";
        os << std::left << std::setw(9) << "class" << std::right << std::setw(4) << "v"
           << std::setw(4) << "l" << std::setw(8) << "proofs"
           << "  histogram (d2:count)  status\n";
        for (std::size_t i = 0; i < census.classes.size(); ++i) {
            const ProofClass& cls = census.classes[i];
            os << std::left << std::setw(9) << cls.label << std::right << std::setw(4) << cls.v
               << std::setw(4) << cls.l << std::setw(8) << cls.proofs.size() << "  "
               << histogram_text(cls.histogram) << "  " << (row_pass[i] ? "PASS" : "FAIL")
               << "\n";
        }
        os << (all_pass ? "all rows match the expected census\n"
                        : "MISMATCH against the expected census\n");
    }
    return all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- verify

struct CheckList {
    std::ostream& os;
    bool all_pass = true;

    void record(const std::string& name, bool ok, const std::string& detail) {
        os << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) os << ": " << detail;
        os << "\n";
        all_pass = all_pass && ok;
    }
};

std::string sign_text(const std::vector<int>& signs) {
    std::string text;
    for (int s : signs) {
        if (!text.empty()) text += ",";
        text += s > 0 ? "+" : "-";
    }
    return text;
}

void verify_magic_suite(CheckList& checks) {
    {
        MerminSquare square = mermin_square();
        std::vector<int> observed = verify_magic(square.contexts);
        bool ok = observed.size() == reference::square_signs.size();
        for (std::size_t i = 0; ok && i < observed.size(); ++i)
            ok = observed[i] == square.contexts[i].expected_sign &&
                 observed[i] == reference::square_signs[i];
        checks.record("square-context-signs", ok, sign_text(observed));
    }
    {
        MerminPentagram pentagram = mermin_pentagram();
        std::vector<int> observed = verify_magic(pentagram.contexts);
        bool ok = observed.size() == reference::pentagram_signs.size();
        for (std::size_t i = 0; ok && i < observed.size(); ++i)
            ok = observed[i] == pentagram.contexts[i].expected_sign &&
                 observed[i] == reference::pentagram_signs[i];
        checks.record("pentagram-context-signs", ok, sign_text(observed));
    }
}

const ProofClass* find_class(const Census& census, const std::string& label) {
    for (const ProofClass& cls : census.classes)
        if (cls.label == label) return &cls;
    return nullptr;
}

void verify_colorability_suite(CheckList& checks, const ProofSystem& square,
                               const Census& square_census, const ProofSystem& pentagram,
                               const Census& pentagram_census, bool long_running) {
    {
        const ProofClass* cls = find_class(square_census, "18-9");
        bool ok = cls && cls->proofs.size() == 16;
        std::size_t checked = 0;
        if (ok)
            for (const ParityProof& p : cls->proofs) {
                ok = ok && !is_ks_colorable(p.ray_ids, p.basis_ids, square);
                ++checked;
            }
        checks.record("square-18-9-noncolorable", ok,
                      std::to_string(checked) + " proofs exhausted");
    }
    {
        const ProofClass* cls = find_class(pentagram_census, "36-11");
        bool ok = cls != nullptr;
        std::size_t limit = 0;
        if (ok) {
            limit = long_running ? cls->proofs.size() : std::min<std::size_t>(32, cls->proofs.size());
            for (std::size_t i = 0; i < limit; ++i)
                ok = ok && !is_ks_colorable(cls->proofs[i].ray_ids, cls->proofs[i].basis_ids,
                                            pentagram);
        }
        checks.record("pentagram-36-11-noncolorable", ok,
                      std::to_string(limit) + " proofs exhausted");
    }
    if (long_running) {
        bool ok = true;
        std::uint64_t checked = 0;
        for (const ProofSystem* sys : {&square, &pentagram}) {
            const Census& census = sys == &square ? square_census : pentagram_census;
            for (const ProofClass& cls : census.classes)
                for (const ParityProof& p : cls.proofs) {
                    ok = ok && !is_ks_colorable(p.ray_ids, p.basis_ids, *sys);
                    ++checked;
                }
        }
        checks.record("full-census-noncolorable", ok, std::to_string(checked) + " proofs");
    }
    {
        auto witness = ks_coloring(square.bases[0].ray_ids, {0}, square);
        checks.record("single-basis-colorable", witness.has_value(),
                      witness ? "witness ray " + std::to_string(witness->front()) : "");
    }
    {
        const ProofClass* cls = find_class(square_census, "18-9");
        bool ok = cls && !cls->proofs.empty();
        if (ok) {
            CriticalityReport report = criticality(cls->proofs.front(), square);
            ok = report.ray_critical && report.basis_critical;
        }
        checks.record("18-9-critical", ok, "single ray and single basis deletions colorable");
    }
    {
        std::vector<std::uint32_t> all_bases(square.bases.size());
        for (std::uint32_t b = 0; b < square.bases.size(); ++b) all_bases[b] = b;
        CriticalityReport report = criticality(all_bases, square);
        checks.record("full-system-not-basis-critical", !report.basis_critical,
                      "some basis deletion stays non-colorable");
    }
}

void verify_structure_suite(CheckList& checks, const ProofSystem& square,
                            const Census& square_census, const ProofSystem& pentagram,
                            const Census& pentagram_census, std::uint64_t seed) {
    {
        const ProofClass* cls = find_class(square_census, "18-9");
        bool ok = cls && cls->proofs.size() == 16;
        std::string first_cert;
        if (ok) {
            for (const ParityProof& p : cls->proofs) {
                StructureReport report =
                    structure_signature(p.basis_ids, square.bases, square.catalog);
                ok = ok && report.passed && report.base_graph_aut == reference::rook_aut_order;
                // base-intersection graphs of all 18-9 proofs are pairwise isomorphic
                OrthoGraph shares((std::uint32_t)p.basis_ids.size());
                for (std::uint32_t i = 0; i < p.basis_ids.size(); ++i)
                    for (std::uint32_t j = i + 1; j < p.basis_ids.size(); ++j) {
                        const auto& a = square.bases[p.basis_ids[i]].ray_ids;
                        const auto& b = square.bases[p.basis_ids[j]].ray_ids;
                        for (std::uint32_t r : a)
                            if (std::binary_search(b.begin(), b.end(), r)) {
                                shares.add_edge(i, j);
                                break;
                            }
                    }
                std::string cert = graph_certificate(shares);
                if (first_cert.empty())
                    first_cert = cert;
                else
                    ok = ok && cert == first_cert;
            }
        }
        checks.record("18-9-rook-structure", ok,
                      "rook-isomorphic, symmetry order 72, rays in exactly 2 bases");
    }
    {
        const ProofClass* cls = find_class(pentagram_census, "36-11");
        bool ok = cls && cls->proofs.size() == 320;
        if (ok)
            for (const ParityProof& p : cls->proofs) {
                StructureReport report =
                    structure_signature(p.basis_ids, pentagram.bases, pentagram.catalog);
                ok = ok && report.passed;
            }
        checks.record("36-11-reference-base-structure", ok,
                      "4 bases sharing 4 rays, 6 disjoint, adjacent pairs sharing 2");
    }
    {
        // distances are properties of bases as sets: invariant under reordering
        std::mt19937_64 rng(seed);
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            std::uint32_t i = (std::uint32_t)(rng() % square.bases.size());
            std::uint32_t j = (std::uint32_t)(rng() % square.bases.size());
            OrthogonalBasis shuffled = square.bases[j];
            std::shuffle(shuffled.ray_ids.begin(), shuffled.ray_ids.end(), rng);
            ok = bengtsson_d2(square.bases[i], shuffled, square.catalog) ==
                 bengtsson_d2(square.bases[i], square.bases[j], square.catalog);
        }
        checks.record("distance-permutation-invariance", ok, "20 shuffled basis pairs");
    }
    {
        bool ok = true;
        for (const ProofClass& cls : square_census.classes) {
            std::uint64_t pairs = (std::uint64_t)cls.l * (cls.l - 1) / 2;
            ok = ok && pair_identity(cls.histogram, cls.l);
            std::uint64_t total = 0;
            for (const auto& [d2, count] : cls.histogram) total += count;
            ok = ok && total == pairs;
        }
        for (const ProofClass& cls : pentagram_census.classes)
            ok = ok && pair_identity(cls.histogram, cls.l);
        checks.record("pair-count-identity", ok, "2 * histogram total = l(l-1) per class");
    }
}

void verify_lattice_suite(CheckList& checks, const RunConfig& cfg) {
    {
        bool ok = true;
        for (std::uint32_t m = 1; m <= 4; ++m)
            ok = ok && kissing_number(m) == reference::counts_rows[m - 1].real_rays;
        ok = ok && kissing_number(5) == reference::counts_row_m5.real_rays;
        checks.record("kissing-recursion", ok, "4, 24, 240, 4320, 146880");
    }
    {
        bool ok = true;
        for (std::uint32_t m = 1; m <= 4; ++m)
            ok = ok && clifford_order(m) == reference::counts_rows[m - 1].aut_order;
        checks.record("clifford-order-formula", ok, "8, 1152, 2580480, 89181388800");
    }
    {
        bool ok = true;
        for (std::uint32_t m : {2u, 3u})
            ok = ok && ray_counts(m, cfg.threads).real_rays == kissing_number(m);
        checks.record("real-ray-kissing-tie", ok, "real ray counts equal kissing numbers");
    }
    for (const reference::LatticeRow& row : reference::lattice_rows) {
        if (row.dimension == 16 && !cfg.long_running) {
            checks.os << "SKIP lattice-minimal-vectors-16: enable with --long-running\n";
            continue;
        }
        LatticeBasis basis = bw_generator(row.dimension);
        bool ok = matrix_determinant(gram_matrix(basis)) == Rational(row.gram_determinant);
        MinimalVectorReport report = minimal_vectors(basis);
        ok = ok && report.min_norm == Rational(row.min_norm) &&
             report.count == row.minimal_vectors;
        checks.record("lattice-minimal-vectors-" + std::to_string(row.dimension), ok,
                      "minimal norm " + report.min_norm.to_string() + ", " +
                          std::to_string(report.count) + " vectors");
    }
    {
        LatticeBasis d4 = bw_generator(4);
        RationalMatrix identity(4, std::vector<Rational>(4, Rational(0)));
        RationalMatrix negation(4, std::vector<Rational>(4, Rational(0)));
        RationalMatrix swap01(4, std::vector<Rational>(4, Rational(0)));
        for (int i = 0; i < 4; ++i) {
            identity[i][i] = Rational(1);
            negation[i][i] = Rational(-1);
            swap01[i][i] = Rational(i < 2 ? 0 : 1);
        }
        swap01[0][1] = Rational(1);
        swap01[1][0] = Rational(1);
        bool ok = is_lattice_automorphism(d4, make_orthogonal(identity)) &&
                  is_lattice_automorphism(d4, make_orthogonal(negation)) &&
                  is_lattice_automorphism(d4, make_orthogonal(swap01));
        checks.record("lattice-automorphism-membership", ok,
                      "identity, negation, axis swap on the 4-dimensional lattice");
    }
}

int cmd_verify(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    if (cfg.suite != "magic" && cfg.suite != "colorability" && cfg.suite != "structure" &&
        cfg.suite != "lattice" && cfg.suite != "all") {
        err << "error: unknown suite: " << cfg.suite << "\n";
        return 2;
    }
    CheckList checks{os};
    if (cfg.suite == "magic" || cfg.suite == "all") verify_magic_suite(checks);
    if (cfg.suite == "colorability" || cfg.suite == "structure" || cfg.suite == "all") {
        ProofSystem square = build_system(SystemKind::MerminSquare, cfg.threads);
        Census square_census = enumerate_parity_proofs(square, cfg.threads);
        ProofSystem pentagram = build_system(SystemKind::MerminPentagram, cfg.threads);
        Census pentagram_census = enumerate_parity_proofs(pentagram, cfg.threads);
        if (cfg.suite == "colorability" || cfg.suite == "all")
            verify_colorability_suite(checks, square, square_census, pentagram,
                                      pentagram_census, cfg.long_running);
        if (cfg.suite == "structure" || cfg.suite == "all")
            verify_structure_suite(checks, square, square_census, pentagram, pentagram_census,
                                   cfg.seed);
    }
    if (cfg.suite == "lattice" || cfg.suite == "all") verify_lattice_suite(checks, cfg);
    os << (checks.all_pass ? "all checks passed\n" : "some checks FAILED\n");
    return checks.all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- export

std::string gaussian_pair(const GaussianInteger& g) {
    return std::to_string(g.re) + "," + std::to_string(g.im);
}

int export_rays(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    if (cfg.qubits > 4) {
        err << "error: ray export supports up to 4 qubits\n";
        return 2;
    }
    RayCatalog catalog = all_rays(cfg.qubits, cfg.threads);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "export-rays";
        doc["qubits"] = cfg.qubits;
        doc["count"] = catalog.size();
        doc["rays"] = ordered_json::array();
        for (std::uint32_t id = 0; id < catalog.size(); ++id) {
            ordered_json amps = ordered_json::array();
            for (const GaussianInteger& a : catalog[id].amplitudes)
                amps.push_back({a.re, a.im});
            doc["rays"].push_back({{"id", id}, {"amplitudes", std::move(amps)}});
        }
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "id";
        for (std::size_t k = 0; k < catalog[0].amplitudes.size(); ++k)
            os << ",re" << k << ",im" << k;
        os << "\n";
        for (std::uint32_t id = 0; id < catalog.size(); ++id) {
            os << id;
            for (const GaussianInteger& a : catalog[id].amplitudes)
                os << "," << a.re << "," << a.im;
            os << "\n";
        }
    } else {
        // one ray per line: id then re,im amplitude pairs
        os << "# rays qubits=" << cfg.qubits << " count=" << catalog.size() << "\n";
        for (std::uint32_t id = 0; id < catalog.size(); ++id) {
            os << id;
            for (const GaussianInteger& a : catalog[id].amplitudes)
                os << " " << gaussian_pair(a);
            os << "\n";
        }
    }
    return 0;
}

int export_graph(const RunConfig& cfg, bool system_given, std::ostream& os, std::ostream& err) {
    OrthoGraph graph;
    std::string name;
    if (system_given) {
        ProofSystem system = build_system(parse_system(cfg.system), cfg.threads);
        graph = std::move(system.graph);
        name = cfg.system;
    } else {
        if (cfg.qubits > 3) {
            err << "error: full-catalog graph export supports up to 3 qubits\n";
            return 2;
        }
        graph = build_graph(all_rays(cfg.qubits, cfg.threads), cfg.threads);
        name = "rays-" + std::to_string(cfg.qubits) + "q";
    }
    if (cfg.format == "dot") {
        os << "graph \"" << name << "\" {\n";
        for (std::uint32_t u = 0; u < graph.n; ++u)
            for (std::uint32_t v = u + 1; v < graph.n; ++v)
                if (graph.adjacent(u, v)) os << "  " << u << " -- " << v << ";\n";
        os << "}\n";
    } else if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "export-graph";
        doc["name"] = name;
        doc["vertices"] = graph.n;
        doc["edges"] = ordered_json::array();
        for (std::uint32_t u = 0; u < graph.n; ++u)
            for (std::uint32_t v = u + 1; v < graph.n; ++v)
                if (graph.adjacent(u, v)) doc["edges"].push_back({u, v});
        os << doc.dump(2) << "\n";
    } else {
        os << (cfg.format == "csv" ? "u,v\n" : "# edges " + name + "\n");
        const char sep = cfg.format == "csv" ? ',' : ' ';
        for (std::uint32_t u = 0; u < graph.n; ++u)
            for (std::uint32_t v = u + 1; v < graph.n; ++v)
                if (graph.adjacent(u, v)) os << u << sep << v << "\n";
    }
    return 0;
}

int export_bases(const RunConfig& cfg, std::ostream& os) {
    ProofSystem system = build_system(parse_system(cfg.system), cfg.threads);
    if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "export-bases";
        doc["system"] = cfg.system;
        doc["count"] = system.bases.size();
        doc["bases"] = ordered_json::array();
        for (std::uint32_t b = 0; b < system.bases.size(); ++b)
            doc["bases"].push_back({{"id", b}, {"rays", system.bases[b].ray_ids}});
        os << doc.dump(2) << "\n";
    } else {
        const bool csv = cfg.format == "csv";
        os << (csv ? "basis,rays\n"
                   : "# bases " + cfg.system + " count=" + std::to_string(system.bases.size()) +
                         "\n");
        for (std::uint32_t b = 0; b < system.bases.size(); ++b) {
            os << b << (csv ? "," : " ");
            for (std::size_t k = 0; k < system.bases[b].ray_ids.size(); ++k)
                os << (k ? " " : "") << system.bases[b].ray_ids[k];
            os << "\n";
        }
    }
    return 0;
}

int export_lattice(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    if (cfg.qubits < 2 || cfg.qubits > 4) {
        err << "error: lattice export supports 2, 3, or 4 qubits (dimensions 4, 8, 16)\n";
        return 2;
    }
    LatticeBasis basis = bw_generator(1u << cfg.qubits);
    RationalMatrix gram = gram_matrix(basis);
    auto matrix_rows = [](const RationalMatrix& m) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : m) {
            ordered_json r = ordered_json::array();
            for (const Rational& x : row) r.push_back(x.to_string());
            rows.push_back(std::move(r));
        }
        return rows;
    };
    if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "export-lattice";
        doc["dimension"] = basis.dimension;
        doc["generator"] = matrix_rows(basis.rows);
        doc["gram"] = matrix_rows(gram);
        os << doc.dump(2) << "\n";
    } else if (cfg.format == "csv" || cfg.format == "dot") {
        err << "error: lattice export supports table or json format\n";
        return 2;
    } else {
        os << "# generator dimension=" << basis.dimension << "\n";
        for (const auto& row : basis.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
            os << "\n";
        }
        os << "# gram\n";
        for (const auto& row : gram) {
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
            os << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact multi-qubit ray, parity-proof census, and lattice toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv", "dot"}));
        cmd->add_option("--out", cfg.out_path, "write output to a file");
        cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        cmd->add_option("--seed", cfg.seed, "seed for randomized spot-checks");
        cmd->add_flag("--long-running", cfg.long_running, "enable the slow extras");
    };

    CLI::App* counts = app.add_subcommand(
        "counts", "ray/mcs cardinalities and symmetry orders per qubit count");
    counts->add_option("--qubits", cfg.qubits, "largest qubit count (default 4)")
        ->check(CLI::Range(1, 5));
    add_common(counts);

    CLI::App* census = app.add_subcommand("census", "parity-proof census of a magic system");
    census->add_option("--system", cfg.system, "mermin-square or mermin-pentagram")
        ->check(CLI::IsMember({"mermin-square", "mermin-pentagram"}));
    add_common(census);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", cfg.suite, "magic, colorability, structure, lattice, or all")
        ->check(CLI::IsMember({"magic", "colorability", "structure", "lattice", "all"}));
    add_common(verify);

    CLI::App* exporter = app.add_subcommand("export", "write rays, graphs, bases, or lattices");
    exporter->add_option("--what", cfg.what, "rays, graph, bases, or lattice")
        ->check(CLI::IsMember({"rays", "graph", "bases", "lattice"}));
    exporter->add_option("--qubits", cfg.qubits, "qubit count for rays/graph/lattice")
        ->check(CLI::Range(1, 5));
    auto* export_system =
        exporter->add_option("--system", cfg.system, "system for graph/bases export")
            ->check(CLI::IsMember({"mermin-square", "mermin-pentagram"}));
    add_common(exporter);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        int code = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? 0 : 2;
    }

    std::ostringstream buffer;
    std::ostringstream errbuf;
    int code = 0;
    try {
        if (counts->parsed()) {
            code = cmd_counts(cfg, buffer, errbuf);
        } else if (census->parsed()) {
            code = cmd_census(cfg, buffer, errbuf);
        } else if (verify->parsed()) {
            code = cmd_verify(cfg, buffer, errbuf);
        } else if (exporter->parsed()) {
            if (cfg.what == "rays")
                code = export_rays(cfg, buffer, errbuf);
            else if (cfg.what == "graph")
                code = export_graph(cfg, export_system->count() > 0, buffer, errbuf);
            else if (cfg.what == "bases")
                code = export_bases(cfg, buffer);
            else
                code = export_lattice(cfg, buffer, errbuf);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << errbuf.str();

    std::string text = buffer.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    if (!text.empty()) text += "\n";
    if (!cfg.out_path.empty() && code != 2) {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << "\n";
            return 1;
        }
        file << text;
    } else {
        out << text;
    }
    return code;
}

}  // namespace pauliray
