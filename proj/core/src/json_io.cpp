#include "colat/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "colat/error.hpp"

namespace colat {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::size_t lookup(const FinLattice& lattice, const std::string& label) {
  auto idx = lattice.find(label);
  if (!idx) throw InputError("unknown element label '" + label + "'");
  return *idx;
}

Json track_to_json(const WeakTrack& track) {
  return Json{{"entries", track.entries}, {"side", track.side}};
}

WeakTrack track_from_json(const Json& json) {
  WeakTrack track;
  track.entries = json.at("entries").get<std::vector<Elem>>();
  track.side = json.at("side").get<Elem>();
  return track;
}

}  // namespace

std::string read_input_text(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return text;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw InputError("empty input from '" + origin + "'");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("cannot parse '" + origin + "': " + e.what());
  }
}

Json read_json_file(const std::string& path) { return parse_json_text(read_input_text(path), path); }

Json poset_to_json(const Poset& poset) {
  Json covers = Json::array();
  for (auto [lo, hi] : poset.covers()) covers.push_back({poset.label(lo), poset.label(hi)});
  return Json{{"elements", poset.labels()}, {"covers", covers}};
}

Poset poset_from_json(const Json& json) {
  return guarded("poset", [&] {
    auto labels = json.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    auto index = [&](const std::string& label) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
      throw InputError("cover mentions unknown element '" + label + "'");
    };
    for (const auto& pair : json.at("covers")) {
      if (pair.size() != 2) throw InputError("each cover must be a pair");
      covers.emplace_back(index(pair[0].get<std::string>()), index(pair[1].get<std::string>()));
    }
    return Poset::from_covers(std::move(labels), covers);
  });
}

Json lattice_to_json(const FinLattice& lattice) {
  Json pairs = Json::array();
  for (auto [lo, hi] : lattice.covers()) pairs.push_back({lo, hi});
  return Json{{"size", lattice.size()}, {"leq_pairs", pairs}, {"labels", lattice.labels()}};
}

FinLattice lattice_from_json(const Json& json) {
  return guarded("lattice", [&] {
    const auto size = json.at("size").get<std::size_t>();
    if (size == 0) throw InputError("lattice size must be positive");
    if (size > kMaxLatticeSize) throw SizeGuardError("lattice exceeds the supported size");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& pair : json.at("leq_pairs")) {
      if (pair.size() != 2) throw InputError("each leq pair must have two entries");
      pairs.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
      if (pairs.back().first >= size || pairs.back().second >= size)
        throw InputError("leq pair index out of range");
    }
    std::vector<std::string> labels;
    if (json.contains("labels")) labels = json.at("labels").get<std::vector<std::string>>();
    return FinLattice::from_pairs(size, pairs, std::move(labels));
  });
}

Json identity_to_json(const Identity& identity) {
  return Json{{"name", identity.name},
              {"vars", identity.variables},
              {"relation", identity.relation == Relation::equals ? "eq" : "le"},
              {"lhs", identity.lhs.to_string()},
              {"rhs", identity.rhs.to_string()}};
}

Identity identity_from_json(const Json& json) {
  return guarded("identity", [&] {
    const auto name = json.value("name", std::string{});
    const auto lhs = json.value("lhs", std::string{});
    const auto rhs = json.value("rhs", std::string{});
    if (lhs.empty() || rhs.empty())
      throw InputError("identity '" + name + "' is an unfilled placeholder (empty lhs or rhs)");
    const auto relation = json.at("relation").get<std::string>();
    if (relation != "eq" && relation != "le")
      throw InputError("relation must be \"eq\" or \"le\", got \"" + relation + "\"");
    auto vars = json.at("vars").get<std::vector<std::string>>();
    return make_identity(name, std::move(vars),
                         relation == "eq" ? Relation::equals : Relation::below,
                         parse_term(lhs), parse_term(rhs));
  });
}

Json certificate_to_json(const FinLattice& lattice, const EmbeddingCertificate& certificate) {
  Json out = Json::array();
  for (const auto& c : certificate.components) {
    Json chain = Json::array();
    for (Elem b : c.chain) chain.push_back(lattice.label(b));
    Json map = Json::array();
    for (const auto& image : c.images) {
      Json set = Json::array();
      for (Elem b : image) set.push_back(lattice.label(b));
      map.push_back(std::move(set));
    }
    out.push_back(
        Json{{"anchor", lattice.label(c.anchor)}, {"chain", chain}, {"map", std::move(map)}});
  }
  return out;
}

EmbeddingCertificate certificate_from_json(const FinLattice& lattice, const Json& json) {
  return guarded("certificate", [&] {
    if (!json.is_array()) throw InputError("certificate must be a JSON array");
    EmbeddingCertificate cert;
    for (const auto& entry : json) {
      CertificateComponent c;
      c.anchor = static_cast<Elem>(lookup(lattice, entry.at("anchor").get<std::string>()));
      for (const auto& label : entry.at("chain"))
        c.chain.push_back(static_cast<Elem>(lookup(lattice, label.get<std::string>())));
      for (const auto& set : entry.at("map")) {
        std::vector<Elem> image;
        for (const auto& label : set)
          image.push_back(static_cast<Elem>(lookup(lattice, label.get<std::string>())));
        c.images.push_back(std::move(image));
      }
      cert.components.push_back(std::move(c));
    }
    return cert;
  });
}

Json bitrack_to_json(const WeakBiTrack& track) {
  return Json{{"sigma", track_to_json(track.sigma)}, {"tau", track_to_json(track.tau)}};
}

WeakBiTrack bitrack_from_json(const Json& json) {
  return guarded("track", [&] {
    return WeakBiTrack{track_from_json(json.at("sigma")), track_from_json(json.at("tau"))};
  });
}

Json map_to_json(const LatticeMap& map) { return Json{{"values", map.values}}; }

LatticeMap map_from_json(const Json& json) {
  return guarded("map", [&] { return LatticeMap{json.at("values").get<std::vector<Elem>>()}; });
}

}  // namespace colat
