// effsq: exact-arithmetic checks for effective squares, cubes, and the
// independence property suites over finitely presented abelian groups.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "effsq/arrow.hpp"
#include "effsq/diagram_io.hpp"
#include "effsq/errors.hpp"
#include "effsq/generator.hpp"
#include "effsq/ncube.hpp"
#include "effsq/normal_forms.hpp"
#include "effsq/report.hpp"
#include "effsq/stability.hpp"

namespace {

constexpr int kExitNotEffective = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << text;
}

nlohmann::json matrix_json(const effsq::IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<std::int64_t>(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string witness_text(const effsq::Verdict& v) {
    if (!v.witness) return "";
    auto note = effsq::note_from_witness(*v.witness);
    std::string s = note.kind;
    if (!note.detail.empty()) s += ": " + note.detail;
    if (!note.element.empty()) s += " element " + note.element;
    if (!note.map.empty()) s += " [" + note.map + "]";
    return s;
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("EFFSQ_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw IoError("EFFSQ_SEED is not a valid integer");
        }
    }
    return cli_seed;
}

// Registry of generated objects with structural dedup, so serialized
// documents reference every endpoint by name.
struct DocBuilder {
    effsq::DiagramDoc doc;
    std::size_t next_group = 0;

    std::string add_group(const effsq::FpAbGroup& g) {
        for (const auto& [name, grp] : doc.groups)
            if (grp == g) return name;
        std::string name = "G" + std::to_string(next_group++);
        doc.groups.emplace(name, g);
        return name;
    }
    void add_hom(const std::string& name, const effsq::Hom& h) {
        add_group(h.src());
        add_group(h.dst());
        doc.homs.emplace(name, h);
    }
    void add_square(const std::string& name, const effsq::Square& sq) {
        add_hom(name + "_f", sq.f());
        add_hom(name + "_g", sq.g());
        add_hom(name + "_h", sq.h());
        add_hom(name + "_k", sq.k());
        doc.squares.emplace(name, sq);
    }
    void add_cube(const std::string& name, const effsq::Cube& cu) {
        add_hom(name + "_a", cu.a());
        add_hom(name + "_b", cu.b());
        add_hom(name + "_c", cu.c());
        add_hom(name + "_d", cu.d());
        add_hom(name + "_f0", cu.f0());
        add_hom(name + "_f1", cu.f1());
        add_hom(name + "_g0", cu.g0());
        add_hom(name + "_g1", cu.g1());
        add_hom(name + "_h0", cu.h0());
        add_hom(name + "_h1", cu.h1());
        add_hom(name + "_f0p", cu.f0p());
        add_hom(name + "_f1p", cu.f1p());
        doc.cubes.emplace(name, cu);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"effective-square workbench for finitely presented abelian groups"};
    app.require_subcommand(1);

    std::string in_path, out_path, class_name_opt = "mono";
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t max_dim = 3;
    bool as_json = false;
    bool timings = false;

    auto add_common = [&](CLI::App* cmd, bool with_class) {
        cmd->add_option("--in", in_path, "input file");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_flag("--json", as_json, "emit JSON instead of tables");
        if (with_class)
            cmd->add_option("--class", class_name_opt, "morphism class: all|mono|pure|split|iso");
    };

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    add_common(snf_cmd, false);
    snf_cmd->get_option("--in")->required();

    auto* po_cmd = app.add_subcommand("pushout", "pushout of a span of homs");
    add_common(po_cmd, false);
    po_cmd->get_option("--in")->required();
    std::string f_name = "f", g_name = "g";
    po_cmd->add_option("--f", f_name, "name of the left span leg (default f)");
    po_cmd->add_option("--g", g_name, "name of the right span leg (default g)");

    auto* cs_cmd = app.add_subcommand("check-square", "decide M-effectiveness of a square");
    add_common(cs_cmd, true);
    cs_cmd->get_option("--in")->required();
    std::string square_name;
    cs_cmd->add_option("--square", square_name, "square name (default: the unique square)");

    auto* cc_cmd = app.add_subcommand("check-cube", "decide M-effectiveness of a cube");
    add_common(cc_cmd, true);
    cc_cmd->get_option("--in")->required();
    std::string cube_name;
    cc_cmd->add_option("--cube", cube_name, "cube name (default: the unique cube)");

    auto* suite_cmd = app.add_subcommand("suite", "seeded property suites");
    add_common(suite_cmd, true);
    suite_cmd->add_option("--seed", seed, "suite seed (EFFSQ_SEED overrides)");
    suite_cmd->add_option("--trials", trials, "trials per property");
    suite_cmd->add_option("--max-dim", max_dim, "top dimension for the excellence probe");
    suite_cmd->add_flag("--timings", timings, "include wall-clock in JSON (breaks byte reproducibility)");
    std::string which = "all";
    suite_cmd->add_option("--suite", which, "weak|closure|excellence|all");

    auto* gen_cmd = app.add_subcommand("gen", "generate seeded instances");
    add_common(gen_cmd, true);
    gen_cmd->add_option("--seed", seed, "generator seed (EFFSQ_SEED overrides)");
    std::string kind = "square";
    std::size_t count = 1;
    gen_cmd->add_option("--kind", kind, "group|hom|span|square|effective-square|cube|near-miss-cube");
    gen_cmd->add_option("--count", count, "number of instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*snf_cmd) {
            auto m = effsq::parse_matrix_doc(read_file(in_path));
            auto snf = effsq::smith_normal_form(m);
            if (as_json) {
                nlohmann::json j = {{"U", matrix_json(snf.U)},
                                    {"D", matrix_json(snf.D)},
                                    {"V", matrix_json(snf.V)}};
                write_output(out_path, j.dump());
            } else {
                std::ostringstream os;
                os << "D = " << snf.D.to_string() << "\n"
                   << "U = " << snf.U.to_string() << "\n"
                   << "V = " << snf.V.to_string() << "\n";
                write_output(out_path, os.str());
            }
            return 0;
        }

        if (*po_cmd) {
            auto doc = effsq::parse_diagram(read_file(in_path));
            auto fit = doc.homs.find(f_name);
            auto git = doc.homs.find(g_name);
            if (fit == doc.homs.end() || git == doc.homs.end())
                throw effsq::Error("span legs '" + f_name + "', '" + g_name + "' not found");
            auto po = effsq::pushout(fit->second, git->second);
            if (as_json) {
                nlohmann::json j = {{"apex", po.apex.canonical().to_string()},
                                    {"inj_left", matrix_json(po.inj_left.matrix())},
                                    {"inj_right", matrix_json(po.inj_right.matrix())}};
                write_output(out_path, j.dump());
            } else {
                std::ostringstream os;
                os << "apex: " << po.apex.canonical().to_string() << "\n"
                   << "inj_left  = " << po.inj_left.matrix().to_string() << "\n"
                   << "inj_right = " << po.inj_right.matrix().to_string() << "\n";
                write_output(out_path, os.str());
            }
            return 0;
        }

        if (*cs_cmd || *cc_cmd) {
            auto doc = effsq::parse_diagram(read_file(in_path));
            effsq::MorphismClass cls =
                cs_cmd->get_option("--class")->count() || cc_cmd->get_option("--class")->count() ||
                        !doc.cls
                    ? effsq::class_from_name(class_name_opt)
                    : *doc.cls;
            effsq::Verdict v;
            if (*cs_cmd) {
                if (square_name.empty()) {
                    if (doc.squares.size() != 1)
                        throw effsq::Error("--square required: document has " +
                                           std::to_string(doc.squares.size()) + " squares");
                    square_name = doc.squares.begin()->first;
                }
                auto it = doc.squares.find(square_name);
                if (it == doc.squares.end())
                    throw effsq::Error("square '" + square_name + "' not found");
                v = effsq::is_effective(it->second, cls);
            } else {
                if (cube_name.empty()) {
                    if (doc.cubes.size() != 1)
                        throw effsq::Error("--cube required: document has " +
                                           std::to_string(doc.cubes.size()) + " cubes");
                    cube_name = doc.cubes.begin()->first;
                }
                auto it = doc.cubes.find(cube_name);
                if (it == doc.cubes.end()) throw effsq::Error("cube '" + cube_name + "' not found");
                v = effsq::is_cube_effective(it->second, cls);
            }
            if (as_json) {
                nlohmann::json j = {{"effective", v.passed}, {"class", class_name(cls)}};
                if (v.witness) {
                    auto note = effsq::note_from_witness(*v.witness);
                    j["witness"] = {{"kind", note.kind}, {"detail", note.detail}};
                    if (!note.element.empty()) j["witness"]["element"] = note.element;
                    if (!note.map.empty()) j["witness"]["map"] = note.map;
                }
                write_output(out_path, j.dump());
            } else {
                std::ostringstream os;
                os << (v.passed ? "effective" : "not effective") << " (class " << class_name(cls)
                   << ")\n";
                if (!witness_text(v).empty()) os << "witness: " << witness_text(v) << "\n";
                write_output(out_path, os.str());
            }
            return v.passed ? 0 : kExitNotEffective;
        }

        if (*suite_cmd) {
            effsq::GeneratorConfig cfg;
            cfg.seed = effective_seed(seed);
            cfg.trials = trials;
            cfg.max_dimension = std::max<std::size_t>(max_dim, 4);
            effsq::MorphismClass cls = effsq::class_from_name(class_name_opt);

            effsq::Report rep;
            rep.seed = cfg.seed;
            rep.config = cfg;
            if (which == "weak" || which == "all")
                rep.append(effsq::run_weak_stability_suite(cls, cfg), "weak.");
            if (which == "closure" || which == "all")
                rep.append(effsq::check_mshriek_closure_suite(cls, cfg), "closure.");
            if (which == "excellence" || which == "all")
                rep.append(effsq::excellence_probe(std::min<std::size_t>(max_dim, 4), cls, cfg),
                           "excellence.");
            if (which != "weak" && which != "closure" && which != "excellence" && which != "all")
                throw effsq::Error("unknown suite '" + which + "'");

            write_output(out_path, as_json ? effsq::render_json(rep, timings)
                                           : effsq::render_table(rep));
            return rep.all_nonvacuous_pass() ? 0 : 1;
        }

        if (*gen_cmd) {
            effsq::GeneratorConfig cfg;
            cfg.seed = effective_seed(seed);
            effsq::MorphismClass cls = effsq::class_from_name(class_name_opt);
            effsq::Rng rng(cfg.seed);
            DocBuilder builder;
            builder.doc.cls = cls;
            for (std::size_t i = 0; i < count; ++i) {
                std::string tag = std::to_string(i);
                if (kind == "group") {
                    builder.add_group(effsq::gen_group(rng, cfg));
                } else if (kind == "hom") {
                    builder.add_hom("h" + tag, effsq::gen_map_in_class(rng, cfg, cls));
                } else if (kind == "span") {
                    auto sp = effsq::gen_span_in_class(rng, cfg, cls);
                    builder.add_hom("f" + tag, sp.f);
                    builder.add_hom("g" + tag, sp.g);
                } else if (kind == "square") {
                    builder.add_square("sq" + tag, effsq::gen_square(rng, cfg, cls));
                } else if (kind == "effective-square") {
                    builder.add_square("sq" + tag, effsq::gen_effective_square(rng, cfg, cls));
                } else if (kind == "cube") {
                    builder.add_cube("cube" + tag, effsq::gen_cube(rng, cfg, cls));
                } else if (kind == "near-miss-cube") {
                    builder.add_cube("cube" + tag, effsq::gen_near_miss_cube(rng, cfg));
                } else {
                    throw effsq::Error("unknown kind '" + kind + "'");
                }
            }
            write_output(out_path, effsq::serialize_diagram(builder.doc));
            return 0;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
