#include "ltree/report.hpp"

#include <sstream>

namespace ltree {

using nlohmann::json;

json witness_to_json(const Witness& w, const SpacePtr& space) {
    json out;
    out["relation"] = w.relation;
    json points = json::object();
    for (const auto& [name, p] : w.points)
        points[name] = space ? space->format_point(p) : std::string("?");
    out["points"] = points;
    json values = json::object();
    for (const auto& [name, v] : w.values) values[name] = format_element(v);
    out["values"] = values;
    if (w.chain) {
        json chain;
        chain["lambda0"] = format_element(w.chain->lambda0);
        json elems = json::array();
        for (const auto& e : w.chain->elements) elems.push_back(format_element(e));
        chain["elements"] = elems;
        out["chain"] = chain;
    }
    return out;
}

json check_report_to_json(const CheckReport& r) {
    json out;
    out["name"] = r.name;
    out["pass"] = r.passed();
    out["samples"] = r.samples_run;
    out["seed"] = r.seed;
    out["witness"] = r.witness ? witness_to_json(*r.witness, r.space) : json(nullptr);
    if (r.status == CheckReport::Status::Skip) {
        out["skipped"] = true;
        out["note"] = r.note;
    }
    return out;
}

std::string check_report_to_text(const CheckReport& r) {
    std::ostringstream os;
    os << "check " << r.name;
    if (!r.space_desc.empty()) os << " on " << r.space_desc;
    if (!r.group.empty()) os << " over " << r.group;
    switch (r.status) {
        case CheckReport::Status::Pass: os << ": PASS"; break;
        case CheckReport::Status::Fail: os << ": FAIL"; break;
        case CheckReport::Status::Skip: os << ": SKIP"; break;
    }
    os << " (" << r.samples_run << " samples, seed " << r.seed << ")";
    if (!r.note.empty()) os << " [" << r.note << "]";
    if (r.witness) {
        os << "\n  witness " << r.witness->relation << ":";
        for (const auto& [name, p] : r.witness->points)
            os << " " << name << "=" << (r.space ? r.space->format_point(p) : "?");
        for (const auto& [name, v] : r.witness->values)
            os << " " << name << "=" << format_element(v);
        if (r.witness->chain) {
            os << " chain(lambda0=" << format_element(r.witness->chain->lambda0) << ")=[";
            bool first = true;
            for (const auto& e : r.witness->chain->elements) {
                if (!first) os << " < ";
                os << format_element(e);
                first = false;
            }
            os << "]";
        }
    }
    return os.str();
}

}  // namespace ltree
