#include "hyperinfect/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hyperinfect/error.hpp"

namespace hyperinfect::io {
namespace {

Vertex parse_label(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 1) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad vertex label '" + token + "'");
  }
  return static_cast<Vertex>(value - 1);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<std::vector<Vertex>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    if (keyword == "vertices") {
      std::string count;
      if (n >= 0) throw InvalidInput("line " + std::to_string(line_no) + ": duplicate 'vertices'");
      if (!(tokens >> count)) throw InvalidInput("line " + std::to_string(line_no) + ": missing vertex count");
      n = static_cast<long long>(parse_label(count, line_no)) + 1;
      std::string extra;
      if (tokens >> extra) throw InvalidInput("line " + std::to_string(line_no) + ": trailing tokens");
    } else if (keyword == "edge") {
      std::vector<Vertex> edge;
      std::string token;
      while (tokens >> token) edge.push_back(parse_label(token, line_no));
      if (edge.empty()) throw InvalidInput("line " + std::to_string(line_no) + ": empty edge");
      edges.push_back(std::move(edge));
    } else {
      throw InvalidInput("line " + std::to_string(line_no) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (n < 0) throw InvalidInput("missing 'vertices N' line");
  return Hypergraph::build(static_cast<std::size_t>(n), edges);
}

std::string to_hg(const Hypergraph& h) {
  std::ostringstream os;
  os << "vertices " << h.vertex_count() << '\n';
  for (const auto& e : h.edges()) {
    os << "edge";
    for (Vertex v : e) os << ' ' << v + 1;
    os << '\n';
  }
  return os.str();
}

Hypergraph from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("vertices").get<long long>();
    if (n < 1) throw InvalidInput("\"vertices\" must be at least 1");
    std::vector<std::vector<Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      std::vector<Vertex> edge;
      for (const auto& label : e) {
        const auto v = label.get<long long>();
        if (v < 1) throw InvalidInput("vertex labels are 1-based");
        edge.push_back(static_cast<Vertex>(v - 1));
      }
      if (edge.empty()) throw InvalidInput("empty edge");
      edges.push_back(std::move(edge));
    }
    return Hypergraph::build(static_cast<std::size_t>(n), edges);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed hypergraph JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back(labels_json(e));
  return {{"vertices", h.vertex_count()}, {"edges", std::move(edges)}};
}

Hypergraph parse_any(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
  }
  return parse_hg(text);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Hypergraph load(const std::string& path) { return parse_any(read_input(path)); }

void save(const Hypergraph& h, const std::string& path) {
  const std::string body = ends_with(path, ".json") ? to_json(h).dump() + "\n" : to_hg(h);
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << body;
}

nlohmann::json labels_json(const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

}  // namespace hyperinfect::io
