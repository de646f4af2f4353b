#include "loosepath/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace loosepath {

using nlohmann::ordered_json;

namespace {

constexpr char kHex[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename T>
T field(const ordered_json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const ordered_json::exception&) {
        throw FormatError(std::string("field '") + name + "' has the wrong type");
    }
}

}  // namespace

std::string coloring_to_hex(const Coloring& coloring) {
    const std::uint64_t bytes = (coloring.edge_count() + 7) / 8;
    std::string out;
    out.reserve(bytes * 2);
    const auto& words = coloring.words();
    for (std::uint64_t i = 0; i < bytes; ++i) {
        const auto byte = static_cast<unsigned>((words[i / 8] >> (8 * (i % 8))) & 0xFF);
        out.push_back(kHex[byte >> 4]);
        out.push_back(kHex[byte & 15]);
    }
    return out;
}

Coloring coloring_from_hex(int n_vertices, int r, const std::string& hex) {
    Coloring coloring(n_vertices, r);
    const std::uint64_t bytes = (coloring.edge_count() + 7) / 8;
    if (hex.size() != bytes * 2)
        throw FormatError("blue_bits has " + std::to_string(hex.size()) + " hex digits, expected " +
                          std::to_string(bytes * 2));
    std::vector<std::uint64_t> words(coloring.words().size(), 0);
    for (std::uint64_t i = 0; i < bytes; ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw FormatError("blue_bits contains a non-hex character");
        words[i / 8] |= static_cast<std::uint64_t>(hi * 16 + lo) << (8 * (i % 8));
    }
    try {
        coloring.assign_words(std::move(words));
    } catch (const std::invalid_argument&) {
        throw FormatError("blue_bits sets bits beyond the last edge");
    }
    return coloring;
}

std::string coloring_to_json(const Coloring& coloring) {
    ordered_json j;
    j["n_vertices"] = coloring.n_vertices();
    j["r"] = coloring.r();
    j["encoding"] = "colex-bitstring";
    j["blue_bits"] = coloring_to_hex(coloring);
    return j.dump() + "\n";
}

Coloring coloring_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    const int n = field<int>(j, "n_vertices");
    const int r = field<int>(j, "r");
    if (field<std::string>(j, "encoding") != "colex-bitstring") throw FormatError("unsupported encoding");
    if (n < 1 || n > kMaxVertices || r < 1 || r > n) throw FormatError("n_vertices/r out of range");
    try {
        return coloring_from_hex(n, r, field<std::string>(j, "blue_bits"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string witness_to_json(const Witness& witness) {
    ordered_json j;
    j["color"] = std::string(to_string(witness.color));
    j["s"] = witness.path.s;
    j["r"] = witness.path.r;
    j["length"] = witness.path.length();
    j["vertices"] = witness.path.vertices;
    return j.dump() + "\n";
}

Witness witness_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    Witness w;
    try {
        w.color = color_from_string(field<std::string>(j, "color"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    w.path.s = field<int>(j, "s");
    w.path.r = field<int>(j, "r");
    w.path.vertices = field<std::vector<Vertex>>(j, "vertices");
    if (w.path.length() != field<int>(j, "length")) throw FormatError("witness length disagrees with vertex count");
    return w;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace loosepath
