#include "cob1/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace cob1::io {

namespace {

bool read_int_field(const json& obj, const std::string& key, const std::string& where,
                    std::vector<std::string>& violations, int& out)
{
    if (!obj.contains(key)) {
        violations.push_back(where + ": missing \"" + key + "\"");
        return false;
    }
    if (!obj[key].is_number_integer()) {
        violations.push_back(where + ": \"" + key + "\" must be an integer");
        return false;
    }
    out = obj[key].get<int>();
    return true;
}

bool read_int_array(const json& value, const std::string& where,
                    std::vector<std::string>& violations, std::vector<int>& out)
{
    if (!value.is_array()) {
        violations.push_back(where + " must be an array of integers");
        return false;
    }
    out.clear();
    for (const auto& entry : value) {
        if (!entry.is_number_integer()) {
            violations.push_back(where + " must contain only integers");
            return false;
        }
        out.push_back(entry.get<int>());
    }
    return true;
}

} // namespace

json to_json(const BranchedCoveringSet& s)
{
    json doc;
    doc["degree"] = s.degree;
    doc["mode"] = mode_name(s.mode);
    doc["components"] = json::array();
    for (const HurwitzData& d : s.components) {
        json comp;
        comp["target_genus"] = d.target_genus;
        comp["handles"] = json::array();
        for (const HandlePair& h : d.handles)
            comp["handles"].push_back(json{{"a", h.a}, {"b", h.b}});
        comp["branch_points"] = json::array();
        for (const BranchPoint& bp : d.branch_points) {
            json point;
            point["cycle"] = bp.cycle;
            if (s.mode == Mode::SO)
                point["sign"] = bp.sign;
            comp["branch_points"].push_back(std::move(point));
        }
        doc["components"].push_back(std::move(comp));
    }
    return doc;
}

BranchedCoveringSet set_from_json(const json& doc)
{
    std::vector<std::string> violations;
    BranchedCoveringSet out;

    if (!doc.is_object()) {
        throw InvalidDataError({"document root must be an object"});
    }
    for (const auto& [key, value] : doc.items())
        if (key != "degree" && key != "mode" && key != "components")
            violations.push_back("unknown top-level key \"" + key + "\"");

    read_int_field(doc, "degree", "document", violations, out.degree);

    if (!doc.contains("mode") || !doc["mode"].is_string()) {
        violations.push_back("document: \"mode\" must be \"so\" or \"o\"");
    } else {
        try {
            out.mode = parse_mode(doc["mode"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            violations.push_back(std::string("document: ") + e.what());
        }
    }

    if (!doc.contains("components") || !doc["components"].is_array()) {
        violations.push_back("document: \"components\" must be an array");
    } else {
        int index = 0;
        for (const auto& comp : doc["components"]) {
            const std::string where = "component " + std::to_string(index);
            HurwitzData d;
            d.degree = out.degree;
            d.mode = out.mode;
            if (!comp.is_object()) {
                violations.push_back(where + " must be an object");
                ++index;
                continue;
            }
            for (const auto& [key, value] : comp.items())
                if (key != "target_genus" && key != "handles" && key != "branch_points")
                    violations.push_back(where + ": unknown key \"" + key + "\"");
            read_int_field(comp, "target_genus", where, violations, d.target_genus);
            if (comp.contains("handles")) {
                if (!comp["handles"].is_array()) {
                    violations.push_back(where + ": \"handles\" must be an array");
                } else {
                    int h = 0;
                    for (const auto& handle : comp["handles"]) {
                        HandlePair pair;
                        const std::string hw = where + " handle " + std::to_string(h);
                        if (!handle.is_object() || !handle.contains("a") || !handle.contains("b")) {
                            violations.push_back(hw + " must be an object with \"a\" and \"b\"");
                        } else {
                            read_int_array(handle["a"], hw + " \"a\"", violations, pair.a);
                            read_int_array(handle["b"], hw + " \"b\"", violations, pair.b);
                        }
                        d.handles.push_back(std::move(pair));
                        ++h;
                    }
                }
            } else {
                violations.push_back(where + ": missing \"handles\"");
            }
            if (comp.contains("branch_points")) {
                if (!comp["branch_points"].is_array()) {
                    violations.push_back(where + ": \"branch_points\" must be an array");
                } else {
                    int m = 0;
                    for (const auto& point : comp["branch_points"]) {
                        BranchPoint bp;
                        const std::string pw = where + " branch point " + std::to_string(m);
                        if (!point.is_object() || !point.contains("cycle")) {
                            violations.push_back(pw + " must be an object with \"cycle\"");
                        } else {
                            read_int_array(point["cycle"], pw + " \"cycle\"", violations, bp.cycle);
                            if (out.mode == Mode::SO) {
                                if (!point.contains("sign") || !point["sign"].is_number_integer())
                                    violations.push_back(pw + ": \"sign\" (1 or -1) is required in "
                                                              "\"so\" documents");
                                else
                                    bp.sign = point["sign"].get<int>();
                            } else if (point.contains("sign")) {
                                violations.push_back(pw + ": \"sign\" is forbidden in \"o\" documents");
                            }
                            for (const auto& [key, value] : point.items())
                                if (key != "cycle" && key != "sign")
                                    violations.push_back(pw + ": unknown key \"" + key + "\"");
                        }
                        d.branch_points.push_back(std::move(bp));
                        ++m;
                    }
                }
            } else {
                violations.push_back(where + ": missing \"branch_points\"");
            }
            out.components.push_back(std::move(d));
            ++index;
        }
    }

    if (!violations.empty())
        throw InvalidDataError(std::move(violations));
    return out;
}

std::string serialize(const BranchedCoveringSet& s, bool pretty)
{
    return pretty ? to_json(s).dump(2) : to_json(s).dump();
}

BranchedCoveringSet parse_document(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidDataError({std::string("JSON parse error: ") + e.what()});
    }
    return set_from_json(doc);
}

BranchedCoveringSet load_document(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return parse_document(buffer.str());
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

void save_document(const BranchedCoveringSet& s, const std::string& path)
{
    if (path == "-") {
        std::cout << serialize(s) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open file for writing: " + path);
    out << serialize(s) << "\n";
}

} // namespace cob1::io
