#include "tempnet/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace tempnet {

namespace {

SparsityPattern pattern_from_json(const nlohmann::json& entries, int rows, int cols,
                                  const std::string& what, int pair_index) {
    SparsityPattern p(rows, cols);
    if (!entries.is_array())
        throw ParseError("subsystem " + std::to_string(pair_index + 1) + ": \"" + what +
                         "\" must be an array of [row, col] pairs");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("subsystem " + std::to_string(pair_index + 1) + ": bad \"" + what +
                             "\" entry, expected [row, col]");
        const int r = e[0].get<int>();
        const int c = e[1].get<int>();
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw ParseError("subsystem " + std::to_string(pair_index + 1) + ": \"" + what +
                             "\" position [" + std::to_string(r) + "," + std::to_string(c) +
                             "] out of bounds");
        p.insert(r - 1, c - 1);
    }
    return p;
}

int max_column(const nlohmann::json& entries) {
    int m = 0;
    if (entries.is_array())
        for (const auto& e : entries)
            if (e.is_array() && e.size() == 2 && e[1].is_number_integer())
                m = std::max(m, e[1].get<int>());
    return m;
}

} // namespace

TemporalNetwork network_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("subsystems"))
        throw ParseError("network object must contain \"n\" and \"subsystems\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw ParseError("\"n\" must be a positive integer");
    if (!j["subsystems"].is_array() || j["subsystems"].empty())
        throw ParseError("\"subsystems\" must be a nonempty array");

    TemporalNetwork net;
    net.n = j["n"].get<int>();
    bool any_label = false;
    int index = 0;
    for (const auto& sub : j["subsystems"]) {
        if (!sub.is_object() || !sub.contains("A") || !sub.contains("B"))
            throw ParseError("subsystem " + std::to_string(index + 1) +
                             " must contain \"A\" and \"B\"");
        int m = max_column(sub["B"]);
        if (sub.contains("m")) {
            if (!sub["m"].is_number_integer() || sub["m"].get<int>() < 0)
                throw ParseError("subsystem " + std::to_string(index + 1) +
                                 ": \"m\" must be a nonnegative integer");
            if (sub["m"].get<int>() < m)
                throw ParseError("subsystem " + std::to_string(index + 1) +
                                 ": \"m\" smaller than a B column index");
            m = sub["m"].get<int>();
        }
        StructuredPair p;
        p.a = pattern_from_json(sub["A"], net.n, net.n, "A", index);
        p.b = pattern_from_json(sub["B"], net.n, m, "B", index);
        net.pairs.push_back(std::move(p));
        net.labels.push_back(sub.contains("label") ? sub["label"].get<std::string>() : "");
        any_label = any_label || sub.contains("label");
        ++index;
    }
    if (!any_label)
        net.labels.clear();

    ValidationResult v = validate_network(net);
    if (!v.ok) {
        std::string msg = "invalid network:";
        for (const std::string& s : v.violations)
            msg += " " + s + ";";
        throw ParseError(msg);
    }
    return net;
}

nlohmann::json network_to_json(const TemporalNetwork& net) {
    nlohmann::json j;
    j["n"] = net.n;
    j["subsystems"] = nlohmann::json::array();
    for (int i = 0; i < net.N(); ++i) {
        const StructuredPair& p = net.pairs[static_cast<std::size_t>(i)];
        nlohmann::json sub;
        sub["A"] = nlohmann::json::array();
        for (const auto& [r, c] : p.a.nonzeros)
            sub["A"].push_back({r + 1, c + 1});
        sub["B"] = nlohmann::json::array();
        for (const auto& [r, c] : p.b.nonzeros)
            sub["B"].push_back({r + 1, c + 1});
        sub["m"] = p.b.cols;
        if (!net.labels.empty() && !net.labels[static_cast<std::size_t>(i)].empty())
            sub["label"] = net.labels[static_cast<std::size_t>(i)];
        j["subsystems"].push_back(std::move(sub));
    }
    return j;
}

TemporalNetwork load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return network_from_json(j);
}

} // namespace tempnet
