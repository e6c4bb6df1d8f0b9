#include "effsq/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace effsq {

PropertyResult& Report::property(const std::string& name) {
    for (auto& p : properties)
        if (p.name == name) return p;
    properties.push_back(PropertyResult{name});
    return properties.back();
}

WitnessNote note_from_witness(const Witness& w) {
    WitnessNote n;
    n.kind = w.kind;
    n.detail = w.detail;
    if (w.map) {
        n.map = w.map->src().canonical().to_string() + " -> " +
                w.map->dst().canonical().to_string() + " via " + w.map->matrix().to_string();
    }
    if (w.element) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < w.element->size(); ++i)
            os << (i ? "," : "") << (*w.element)[i];
        os << ")";
        n.element = os.str();
    }
    return n;
}

void Report::record(const std::string& property_name, std::uint64_t trial_seed, const Verdict& v,
                    std::size_t witness_cap) {
    auto& p = property(property_name);
    if (v.vacuous) {
        ++p.vacuous;
        return;
    }
    if (v.passed) {
        ++p.pass;
        return;
    }
    ++p.fail;
    p.failing_seeds.push_back(trial_seed);
    if (p.witnesses.size() < witness_cap && v.witness)
        p.witnesses.push_back(note_from_witness(*v.witness));
}

bool Report::all_nonvacuous_pass() const {
    for (const auto& p : properties)
        if (p.fail != 0) return false;
    return true;
}

void Report::append(const Report& other, const std::string& prefix) {
    for (const auto& p : other.properties) {
        PropertyResult copy = p;
        copy.name = prefix + p.name;
        properties.push_back(std::move(copy));
    }
    elapsed_ms += other.elapsed_ms;
}

namespace {

nlohmann::json config_json(const GeneratorConfig& c) {
    return {
        {"seed", c.seed},
        {"max_generators", c.max_generators},
        {"entry_bound", c.entry_bound},
        {"max_relations", c.max_relations},
        {"trials", c.trials},
        {"max_dimension", c.max_dimension},
        {"quotas",
         {{"zero_source", c.quotas.zero_source},
          {"identity_edges", c.quotas.identity_edges},
          {"finite_only", c.quotas.finite_only}}},
    };
}

} // namespace

std::string render_json(const Report& r, bool include_timings) {
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : r.properties) {
        nlohmann::json witnesses = nlohmann::json::array();
        for (const auto& w : p.witnesses) {
            nlohmann::json jw = {{"kind", w.kind}, {"detail", w.detail}};
            if (!w.map.empty()) jw["map"] = w.map;
            if (!w.element.empty()) jw["element"] = w.element;
            witnesses.push_back(jw);
        }
        props.push_back({{"name", p.name},
                         {"pass", p.pass},
                         {"fail", p.fail},
                         {"vacuous", p.vacuous},
                         {"failing_seeds", p.failing_seeds},
                         {"witnesses", witnesses}});
    }
    nlohmann::json doc = {
        {"schema", r.schema},
        {"seed", r.seed},
        {"config", config_json(r.config)},
        {"properties", props},
        {"elapsed_ms", include_timings ? r.elapsed_ms : 0},
    };
    return doc.dump();
}

std::string render_table(const Report& r) {
    std::ostringstream os;
    os << "property                                  pass   fail  vacuous\n";
    os << "-------------------------------------------------------------\n";
    for (const auto& p : r.properties) {
        os << std::left << std::setw(40) << p.name << std::right << std::setw(7) << p.pass
           << std::setw(7) << p.fail << std::setw(9) << p.vacuous << "\n";
        for (std::size_t i = 0; i < p.failing_seeds.size() && i < 5; ++i) {
            os << "    failing seed " << p.failing_seeds[i];
            if (i < p.witnesses.size()) {
                os << "  [" << p.witnesses[i].kind;
                if (!p.witnesses[i].detail.empty()) os << ": " << p.witnesses[i].detail;
                if (!p.witnesses[i].element.empty()) os << " " << p.witnesses[i].element;
                os << "]";
            }
            os << "\n";
        }
    }
    os << "-------------------------------------------------------------\n";
    os << "elapsed: " << r.elapsed_ms << " ms\n";
    return os.str();
}

} // namespace effsq
