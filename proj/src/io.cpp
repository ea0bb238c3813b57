#include "tdgen/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tdgen/errors.hpp"
#include "tdgen/util.hpp"

namespace tdgen {

namespace {

std::string at(const std::string& origin, std::size_t line) {
    return origin + ":" + std::to_string(line) + ": ";
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> to_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

// "key: value" -> (key, value); returns false when no ": " separator exists.
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const auto pos = line.find(": ");
    if (pos == std::string::npos) return false;
    key = line.substr(0, pos);
    value = line.substr(pos + 2);
    return true;
}

double parse_number(const std::string& tok, const std::string& origin, std::size_t line) {
    double v;
    if (!parse_double(tok, v))
        throw MalformedFile(at(origin, line) + "cannot parse number \"" + tok + "\"");
    return v;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedFile("cannot open \"" + path.string() + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t write_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedFile("cannot write \"" + path.string() + "\"");
    out << text;
    out.close();
    if (!out) throw MalformedFile("write to \"" + path.string() + "\" failed");
    return text.size();
}

}  // namespace

std::string render_instance(const Instance& inst) {
    const Metadata& md = inst.metadata;
    std::string s;
    s += "tdgen instance " + std::to_string(kInstanceFormatVersion) + "\n";
    s += "dimension: " + std::string(inst.dimension == Dimension::TwoD ? "2D" : "3D") + "\n";
    s += "n: " + std::to_string(inst.size()) + "\n";
    s += "dmin: " + format_double(inst.safety_distance) + "\n";
    s += "scenario: " + md.scenario + "\n";
    s += "seed: " + std::to_string(md.seed) + "\n";
    if (!md.generator_version.empty()) s += "generator: " + md.generator_version + "\n";
    for (const auto& [key, value] : md.params) s += "param." + key + ": " + value + "\n";
    if (md.requested_conflicts)
        s += "requested-conflicts: " + std::to_string(*md.requested_conflicts) + "\n";
    if (md.achieved_conflicts)
        s += "achieved-conflicts: " + std::to_string(*md.achieved_conflicts) + "\n";
    if (md.escalated) s += "escalated: true\n";
    s += "aircraft:\n";
    for (const Aircraft& a : inst.aircraft) {
        s += std::to_string(a.id);
        for (double v : {a.p_hat.x, a.p_hat.y, a.p_hat.z, a.v_hat.x, a.v_hat.y, a.v_hat.z})
            s += " " + format_double(v);
        s += "\n";
    }
    return s;
}

Instance parse_instance(const std::string& text, const std::string& origin) {
    const std::vector<std::string> lines = to_lines(text);
    if (lines.empty()) throw MalformedFile(origin + ": empty file");

    // magic line
    {
        const auto tok = split_ws(lines[0]);
        if (tok.size() != 3 || tok[0] != "tdgen" || tok[1] != "instance")
            throw MalformedFile(at(origin, 1) + "not a tdgen instance file");
        long long ver;
        if (!parse_long(tok[2], ver))
            throw MalformedFile(at(origin, 1) + "cannot parse format version \"" + tok[2] + "\"");
        if (ver != kInstanceFormatVersion)
            throw VersionMismatch(at(origin, 1) + "unsupported format version " + tok[2] +
                                  " (this build reads version " +
                                  std::to_string(kInstanceFormatVersion) + ")");
    }

    Instance inst;
    std::optional<long long> header_n;
    bool saw_dimension = false, saw_dmin = false;
    std::set<std::string> seen;
    std::size_t row_start = 0;

    std::size_t li = 1;
    for (; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        if (line == "aircraft:") {
            row_start = li + 1;
            break;
        }
        std::string key, value;
        if (!split_header(line, key, value))
            throw MalformedFile(at(origin, li + 1) + "expected \"key: value\", got \"" + line + "\"");
        if (key.rfind("param.", 0) == 0) {
            inst.metadata.params.emplace_back(key.substr(6), value);
            continue;
        }
        if (!seen.insert(key).second)
            throw MalformedFile(at(origin, li + 1) + "duplicate header key \"" + key + "\"");
        if (key == "dimension") {
            if (value == "2D") inst.dimension = Dimension::TwoD;
            else if (value == "3D") inst.dimension = Dimension::ThreeD;
            else throw MalformedFile(at(origin, li + 1) + "dimension must be 2D or 3D");
            saw_dimension = true;
        } else if (key == "n") {
            long long v;
            if (!parse_long(value, v) || v < 1)
                throw MalformedFile(at(origin, li + 1) + "n must be a positive integer");
            header_n = v;
        } else if (key == "dmin") {
            const double v = parse_number(value, origin, li + 1);
            if (!(v > 0.0)) throw MalformedFile(at(origin, li + 1) + "dmin must be positive");
            inst.safety_distance = v;
            saw_dmin = true;
        } else if (key == "scenario") {
            inst.metadata.scenario = value;
        } else if (key == "seed") {
            try {
                inst.metadata.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw MalformedFile(at(origin, li + 1) + "cannot parse seed \"" + value + "\"");
            }
        } else if (key == "generator") {
            inst.metadata.generator_version = value;
        } else if (key == "requested-conflicts") {
            long long v;
            if (!parse_long(value, v))
                throw MalformedFile(at(origin, li + 1) + "cannot parse requested-conflicts");
            inst.metadata.requested_conflicts = v;
        } else if (key == "achieved-conflicts") {
            long long v;
            if (!parse_long(value, v))
                throw MalformedFile(at(origin, li + 1) + "cannot parse achieved-conflicts");
            inst.metadata.achieved_conflicts = v;
        } else if (key == "escalated") {
            if (value != "true" && value != "false")
                throw MalformedFile(at(origin, li + 1) + "escalated must be true or false");
            inst.metadata.escalated = value == "true";
        } else {
            throw MalformedFile(at(origin, li + 1) + "unknown header key \"" + key + "\"");
        }
    }
    if (row_start == 0) throw MalformedFile(origin + ": missing \"aircraft:\" section");
    if (!saw_dimension) throw MalformedFile(origin + ": missing header key \"dimension\"");
    if (!header_n) throw MalformedFile(origin + ": missing header key \"n\"");
    if (!saw_dmin) throw MalformedFile(origin + ": missing header key \"dmin\"");

    std::set<int> ids;
    for (li = row_start; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        const auto tok = split_ws(line);
        if (tok.size() != 7)
            throw MalformedFile(at(origin, li + 1) + "expected 7 fields (id x y z vx vy vz), got " +
                                std::to_string(tok.size()));
        long long id;
        if (!parse_long(tok[0], id) || id < 0 || id >= *header_n)
            throw MalformedFile(at(origin, li + 1) + "aircraft id \"" + tok[0] +
                                "\" outside [0, n)");
        if (!ids.insert(static_cast<int>(id)).second)
            throw MalformedFile(at(origin, li + 1) + "duplicate aircraft id " + tok[0]);
        Aircraft a;
        a.id = static_cast<int>(id);
        a.p_hat = {parse_number(tok[1], origin, li + 1), parse_number(tok[2], origin, li + 1),
                   parse_number(tok[3], origin, li + 1)};
        a.v_hat = {parse_number(tok[4], origin, li + 1), parse_number(tok[5], origin, li + 1),
                   parse_number(tok[6], origin, li + 1)};
        if (inst.dimension == Dimension::TwoD && (a.p_hat.z != 0.0 || a.v_hat.z != 0.0))
            throw MalformedFile(at(origin, li + 1) + "aircraft " + tok[0] +
                                " has a nonzero z component in a 2D instance");
        if (!(a.v_hat.norm2() > 0.0))
            throw MalformedFile(at(origin, li + 1) + "aircraft " + tok[0] + " has zero velocity");
        inst.aircraft.push_back(a);
    }
    if (static_cast<long long>(inst.aircraft.size()) != *header_n)
        throw MalformedFile(origin + ": header declares n = " + std::to_string(*header_n) +
                            " but the body has " + std::to_string(inst.aircraft.size()) +
                            " aircraft rows");
    std::sort(inst.aircraft.begin(), inst.aircraft.end(),
              [](const Aircraft& a, const Aircraft& b) { return a.id < b.id; });
    return inst;
}

std::size_t write_instance(const Instance& inst, const std::filesystem::path& destination) {
    return write_file(render_instance(inst), destination);
}

Instance read_instance(const std::filesystem::path& source) {
    return parse_instance(read_file(source), source.string());
}

std::string render_solution(const Solution& sol) {
    std::string s;
    s += "tdgen solution " + std::to_string(kInstanceFormatVersion) + "\n";
    if (!sol.instance_ref.empty()) s += "instance: " + sol.instance_ref + "\n";
    s += "n: " + std::to_string(sol.velocities.size()) + "\n";
    s += "velocities:\n";
    for (const auto& [id, v] : sol.velocities) {
        s += std::to_string(id);
        for (double c : {v.x, v.y, v.z}) s += " " + format_double(c);
        s += "\n";
    }
    return s;
}

Solution parse_solution(const std::string& text, const std::string& origin) {
    const std::vector<std::string> lines = to_lines(text);
    if (lines.empty()) throw MalformedFile(origin + ": empty file");
    {
        const auto tok = split_ws(lines[0]);
        if (tok.size() != 3 || tok[0] != "tdgen" || tok[1] != "solution")
            throw MalformedFile(at(origin, 1) + "not a tdgen solution file");
        long long ver;
        if (!parse_long(tok[2], ver) || ver != kInstanceFormatVersion)
            throw VersionMismatch(at(origin, 1) + "unsupported format version \"" + tok[2] + "\"");
    }
    Solution sol;
    std::optional<long long> header_n;
    std::size_t row_start = 0;
    std::size_t li = 1;
    for (; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        if (line == "velocities:") {
            row_start = li + 1;
            break;
        }
        std::string key, value;
        if (!split_header(line, key, value))
            throw MalformedFile(at(origin, li + 1) + "expected \"key: value\", got \"" + line + "\"");
        if (key == "instance") {
            sol.instance_ref = value;
        } else if (key == "n") {
            long long v;
            if (!parse_long(value, v) || v < 1)
                throw MalformedFile(at(origin, li + 1) + "n must be a positive integer");
            header_n = v;
        } else {
            throw MalformedFile(at(origin, li + 1) + "unknown header key \"" + key + "\"");
        }
    }
    if (row_start == 0) throw MalformedFile(origin + ": missing \"velocities:\" section");
    if (!header_n) throw MalformedFile(origin + ": missing header key \"n\"");
    std::set<int> ids;
    for (li = row_start; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line)) continue;
        const auto tok = split_ws(line);
        if (tok.size() != 4)
            throw MalformedFile(at(origin, li + 1) + "expected 4 fields (id vx vy vz), got " +
                                std::to_string(tok.size()));
        long long id;
        if (!parse_long(tok[0], id))
            throw MalformedFile(at(origin, li + 1) + "cannot parse aircraft id \"" + tok[0] + "\"");
        if (!ids.insert(static_cast<int>(id)).second)
            throw MalformedFile(at(origin, li + 1) + "duplicate aircraft id " + tok[0]);
        Vec3 v{parse_number(tok[1], origin, li + 1), parse_number(tok[2], origin, li + 1),
               parse_number(tok[3], origin, li + 1)};
        sol.velocities.emplace_back(static_cast<int>(id), v);
    }
    if (static_cast<long long>(sol.velocities.size()) != *header_n)
        throw MalformedFile(origin + ": header declares n = " + std::to_string(*header_n) +
                            " but the body has " + std::to_string(sol.velocities.size()) +
                            " velocity rows");
    return sol;
}

std::size_t write_solution(const Solution& sol, const std::filesystem::path& destination) {
    return write_file(render_solution(sol), destination);
}

Solution read_solution(const std::filesystem::path& source) {
    return parse_solution(read_file(source), source.string());
}

ComplexityReport validate_solution(const Instance& inst, const Solution& sol) {
    std::unordered_map<int, Vec3> by_id;
    for (const auto& [id, v] : sol.velocities) by_id.emplace(id, v);
    for (const Aircraft& a : inst.aircraft) {
        if (by_id.find(a.id) == by_id.end())
            throw IdMismatch("solution is missing aircraft id " + std::to_string(a.id));
    }
    if (by_id.size() != inst.aircraft.size())
        throw IdMismatch("solution lists " + std::to_string(by_id.size()) +
                         " aircraft, instance has " + std::to_string(inst.aircraft.size()));

    Instance adjusted = inst;
    for (Aircraft& a : adjusted.aircraft) {
        const Vec3& v = by_id.at(a.id);
        if (!v.finite() || !(v.norm2() > 0.0))
            throw MalformedFile("solution velocity for aircraft " + std::to_string(a.id) +
                                " must be finite and nonzero");
        if (adjusted.dimension == Dimension::TwoD && v.z != 0.0)
            throw MalformedFile("solution velocity for aircraft " + std::to_string(a.id) +
                                " has a nonzero z component in a 2D instance");
        a.v_hat = v;
    }
    return analyze(adjusted);
}

}  // namespace tdgen
