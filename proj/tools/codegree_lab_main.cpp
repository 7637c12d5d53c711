// codegree-lab: build finite solvable groups, compute their character tables
// and codegrees, and check prime-support properties of the codegree set.
//
// Exit codes: 0 success, 10 order-coverage violations found (moreto),
// 2 input error, 3 resource limit, 4 internal consistency failure.

#include "cgl/chartab.hpp"
#include "cgl/codegree.hpp"
#include "cgl/constructors.hpp"
#include "cgl/descriptor.hpp"
#include "cgl/errors.hpp"
#include "cgl/group.hpp"
#include "cgl/table_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

using nlohmann::ordered_json;

struct CommonArgs {
    std::string preset;
    std::string descriptor_file;
    std::string cache;
    std::string json_file;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    CLI::Option* p = cmd->add_option("--preset", a.preset,
                                     "named group (trivial, C_n, S3, S4, A4, D8, Q8, SL23, "
                                     "extraspecial_p_small, torus_t, paper_g)");
    CLI::Option* f =
        cmd->add_option("--descriptor", a.descriptor_file, "path to a JSON group descriptor");
    p->excludes(f);
    f->excludes(p);
    cmd->add_option("--cache", a.cache,
                    "table cache directory (default: $CODEGREE_LAB_CACHE when set)");
    cmd->add_option("--threads", a.threads, "worker threads for table verification")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--json", a.json_file, "write the JSON document to this file instead of stdout");
}

cgl::GroupDescriptor resolve_group(const CommonArgs& a, const std::string& fallback_preset) {
    if (!a.preset.empty()) return cgl::GroupDescriptor::preset(a.preset);
    if (!a.descriptor_file.empty()) {
        std::ifstream in(a.descriptor_file, std::ios::binary);
        if (!in) throw cgl::InputError("cannot open descriptor file: " + a.descriptor_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return cgl::GroupDescriptor::parse(ss.str());
    }
    if (!fallback_preset.empty()) return cgl::GroupDescriptor::preset(fallback_preset);
    throw cgl::InputError("one of --preset or --descriptor is required");
}

void emit(const ordered_json& doc, const CommonArgs& a) {
    std::string text = cgl::dump_document(doc);
    if (!a.json_file.empty()) {
        std::ofstream out(a.json_file, std::ios::binary | std::ios::trunc);
        if (!out) throw cgl::InputError("cannot write JSON file: " + a.json_file);
        out << text;
        if (!out) throw cgl::InputError("cannot write JSON file: " + a.json_file);
    } else {
        std::cout << text;
    }
}

int cmd_build(const CommonArgs& a) {
    cgl::GroupDescriptor d = resolve_group(a, "");
    cgl::FiniteGroup G = cgl::build_from_descriptor(d);
    emit(cgl::group_summary_json(d, G), a);
    return 0;
}

int cmd_chartab(const CommonArgs& a) {
    cgl::GroupDescriptor d = resolve_group(a, "");
    cgl::TableSource src = cgl::load_or_compute_table(d, a.cache, a.threads);
    emit(cgl::table_json(d, src.tbl), a);
    return 0;
}

int cmd_codegrees(const CommonArgs& a) {
    cgl::GroupDescriptor d = resolve_group(a, "");
    cgl::TableSource src = cgl::load_or_compute_table(d, a.cache, a.threads);
    std::vector<cgl::CodegreeRecord> recs = cgl::codegrees(src.tbl);
    ordered_json doc;
    doc["format"] = 1;
    doc["descriptor"] = ordered_json::parse(d.canonical);
    doc["order"] = src.tbl.group_order;
    doc["codegree_set"] = cgl::codegree_set(recs);
    doc["codegrees"] = cgl::codegree_records_json(recs);
    emit(doc, a);
    return 0;
}

int cmd_moreto(const CommonArgs& a) {
    cgl::GroupDescriptor d = resolve_group(a, "");
    cgl::TableSource src = cgl::load_or_compute_table(d, a.cache, a.threads);
    std::vector<cgl::CodegreeRecord> recs = cgl::codegrees(src.tbl);
    cgl::MoretoReport rep = cgl::moreto_check(src.tbl, recs);
    ordered_json doc;
    doc["format"] = 1;
    doc["descriptor"] = ordered_json::parse(d.canonical);
    doc["order"] = src.tbl.group_order;
    doc["codegree_set"] = cgl::codegree_set(recs);
    doc["moreto"] = cgl::moreto_json(rep);
    emit(doc, a);
    return rep.negative_answer ? 10 : 0;
}

ordered_json cert_json(const cgl::RamifiedSectionCertificate& c) {
    ordered_json j;
    j["applicable"] = c.applicable;
    j["center_cyclic"] = c.center_cyclic;
    j["section_is_chief"] = c.section_is_chief;
    j["coprime"] = c.coprime;
    j["fitting_center_is_center"] = c.fitting_center_is_center;
    j["hypotheses_hold"] = c.hypotheses_hold;
    j["fitting_order"] = c.fitting_order;
    j["center_order"] = c.center_order;
    j["section_order"] = c.section_order;
    j["expected_codegree"] = c.expected_codegree;
    j["witnesses"] = c.witnesses;
    j["quotient_spectrum_misses_full_pi"] = c.quotient_spectrum_misses_full_pi;
    return j;
}

std::string join_u64(const std::vector<uint64_t>& v) {
    std::string s;
    for (uint64_t x : v) {
        if (!s.empty()) s += ",";
        s += std::to_string(x);
    }
    return s;
}

int cmd_verify_paper(const CommonArgs& a) {
    cgl::GroupDescriptor d = resolve_group(a, "paper_g");
    const bool flagship = d.canonical == cgl::GroupDescriptor::preset("paper_g").canonical;

    cgl::FiniteGroup G = cgl::build_from_descriptor(d);
    cgl::ClassData cd = cgl::conjugacy_classes(G);
    cgl::TableSource src;
    if (std::optional<cgl::CharacterTable> hit =
            cgl::try_load_cached_table(d, a.cache, a.threads)) {
        src = cgl::TableSource{std::move(*hit), true};
    } else {
        src = cgl::TableSource{cgl::compute_and_store_table(G, d, a.cache, a.threads), false};
    }
    const cgl::CharacterTable& tbl = src.tbl;
    std::vector<cgl::CodegreeRecord> recs = cgl::codegrees(tbl);
    cgl::RamifiedSectionCertificate cert = cgl::verify_ramified_section(G, cd, tbl, recs);
    cgl::MoretoReport moreto = cgl::moreto_check(tbl, recs);
    cgl::QianReport qian = cgl::qian_property_test(tbl, recs);
    cgl::SpectrumReport spec = cgl::element_order_spectrum(cd);
    std::set<uint64_t> cods = cgl::codegree_set(recs);

    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        ordered_json jc;
        jc["name"] = name;
        jc["pass"] = pass;
        jc["detail"] = detail;
        checks.push_back(std::move(jc));
        all_pass = all_pass && pass;
    };

    // group-independent battery (reaching this point already certifies the
    // table invariants and codegree integrality; both throw on failure)
    check("table_invariants", true,
          "orthogonality, degree sum, divisibility and conjugate symmetry verified");
    check("codegree_integrality", true, "|G:Ker|/chi(1) integral for every character");
    {
        bool ok = true;
        for (const cgl::CodegreeRecord& rec : recs) {
            if (!cgl::kernel_is_normal_subgroup(G, cd, rec)) {
                ok = false;
                break;
            }
        }
        check("kernels_are_normal_subgroups", ok, "every kernel is a class-closed subgroup");
    }
    check("qian_order_divisibility", qian.holds, "every element order divides some codegree");

    if (cert.hypotheses_hold) {
        bool wits = !cert.witnesses.empty();
        for (size_t w : cert.witnesses) {
            wits = wits && recs[w].codegree == cert.expected_codegree;
        }
        check("ramified_section_witnesses", wits,
              "faithful characters with chi(1)^2 = |F:Z|, irreducible on F, vanishing off the "
              "center, cod = |G|/chi(1): " + std::to_string(cert.witnesses.size()));
        check("witness_prime_support",
              cgl::witnesses_have_full_prime_support(cert, recs, G.order()),
              "pi(cod chi) = pi(|G|) for every witness");
    }

    if (flagship) {
        check("order", G.order() == 337920, "|G| = " + std::to_string(G.order()));
        check("center", cert.center_order == 2 && cert.center_cyclic,
              "|Z(G)| = " + std::to_string(cert.center_order) + ", cyclic");
        check("fitting", cert.fitting_order == 2048,
              "|F(G)| = " + std::to_string(cert.fitting_order));
        check("coprime_section", cert.coprime, "gcd(|F(G)|, |G/F(G)|) = 1");
        check("chief_section", cert.section_is_chief,
              "F(G)/Z(G) is a chief factor (irreducible as a module)");
        check("hypotheses", cert.hypotheses_hold,
              "non-nilpotent, Z(F(G)) = Z(G), and conditions (1)-(3) all hold");

        const std::set<uint64_t> expected = {1, 3, 5, 11, 15, 33, 1024, 2112, 5120, 10560};
        if (cods == expected) {
            std::vector<uint64_t> v(cods.begin(), cods.end());
            check("codegree_set", true, "{" + join_u64(v) + "}");
        } else {
            std::vector<uint64_t> missing, unexpected;
            std::set_difference(expected.begin(), expected.end(), cods.begin(), cods.end(),
                                std::back_inserter(missing));
            std::set_difference(cods.begin(), cods.end(), expected.begin(), expected.end(),
                                std::back_inserter(unexpected));
            check("codegree_set", false,
                  "missing {" + join_u64(missing) + "}, unexpected {" + join_u64(unexpected) + "}");
        }

        {
            bool ok = !cert.witnesses.empty() && cert.expected_codegree == 10560;
            for (size_t w : cert.witnesses) {
                ok = ok && recs[w].degree == 32 && recs[w].codegree == 10560 &&
                     recs[w].kernel_order == 1;
            }
            check("witness_degree_32", ok,
                  std::to_string(cert.witnesses.size()) +
                      " faithful degree-32 characters with cod = 337920/32 = 10560");
        }
        check("question_b_negative", moreto.negative_answer,
              std::to_string(moreto.violations.size()) +
                  " characters whose codegree primes are covered by no element order");
        {
            std::set<size_t> viol(moreto.violations.begin(), moreto.violations.end());
            std::set<size_t> maxcod;
            for (const cgl::CodegreeRecord& rec : recs) {
                if (rec.codegree == 10560) maxcod.insert(rec.chi);
            }
            check("violations_are_exactly_cod_10560", !viol.empty() && viol == maxcod,
                  "a character violates iff cod = 10560");
        }
        {
            std::vector<uint64_t> full = cgl::pi_set(G.order());
            bool none = true;
            for (uint64_t o : spec.orders) {
                std::vector<uint64_t> po = cgl::pi_set(o);
                if (std::includes(po.begin(), po.end(), full.begin(), full.end())) none = false;
            }
            check("no_element_order_covers_group_primes", none,
                  "no element order is divisible by 2*3*5*11");
        }
        check("quotient_spectrum", cert.quotient_spectrum_misses_full_pi,
              "no element of G/F(G) has order divisible by every prime of |G/F(G)|");
    }

    ordered_json doc;
    doc["format"] = 1;
    doc["descriptor"] = ordered_json::parse(d.canonical);
    doc["flagship"] = flagship;
    ordered_json jg;
    jg["order"] = G.order();
    jg["num_classes"] = cd.num_classes();
    jg["exponent"] = cd.exponent;
    jg["spectrum"] = spec.orders;
    doc["group"] = std::move(jg);
    doc["certificate"] = cert_json(cert);
    doc["hypotheses_inapplicable"] = !cert.hypotheses_hold;
    doc["codegree_set"] = cods;
    doc["moreto"] = cgl::moreto_json(moreto);
    doc["qian"] = cgl::qian_json(qian);
    doc["checks"] = std::move(checks);
    doc["all_pass"] = all_pass;
    emit(doc, a);
    return all_pass ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"character tables and codegrees of finite solvable groups"};
    app.require_subcommand(1);

    CommonArgs a_build, a_chartab, a_codegrees, a_moreto, a_verify;
    CLI::App* c_build =
        app.add_subcommand("build", "enumerate a group and print a structural summary");
    add_common(c_build, a_build);
    CLI::App* c_chartab = app.add_subcommand("chartab", "compute or load the character table");
    add_common(c_chartab, a_chartab);
    CLI::App* c_codegrees = app.add_subcommand("codegrees", "compute the codegree records");
    add_common(c_codegrees, a_codegrees);
    CLI::App* c_moreto = app.add_subcommand(
        "moreto", "check codegree prime support against element orders (exit 10 on violations)");
    add_common(c_moreto, a_moreto);
    CLI::App* c_verify = app.add_subcommand(
        "verify-paper", "one-shot reproduction of the flagship counterexample (default paper_g)");
    add_common(c_verify, a_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_build->parsed()) return cmd_build(a_build);
        if (c_chartab->parsed()) return cmd_chartab(a_chartab);
        if (c_codegrees->parsed()) return cmd_codegrees(a_codegrees);
        if (c_moreto->parsed()) return cmd_moreto(a_moreto);
        if (c_verify->parsed()) return cmd_verify_paper(a_verify);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const cgl::InputError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const cgl::ResourceError& ex) {
        std::cerr << "resource limit: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 4;
    }
}
