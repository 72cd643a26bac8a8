#include "cg/transcript.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace cg {

namespace {

Player require_player(const std::string& s) {
  auto p = parse_player(s);
  if (!p) throw std::runtime_error("unknown player: " + s);
  return *p;
}

PlayOutcome run(GameState& st, Strategy& maker, Strategy& breaker,
                const std::vector<Monitor*>& monitors, std::vector<MoveRecord>* record) {
  while (!st.over()) {
    Player p = st.turn();
    Strategy& actor = p == Player::Maker ? maker : breaker;
    MoveRecord mr;
    mr.round = st.round();
    mr.player = p;
    while (!st.over() && st.turn() == p) {
      auto e = actor.choose_step(st);
      if (!e) {
        if (p == Player::Maker)
          st.forfeit(p);
        else
          st.pass_move(p);
        break;
      }
      st.apply_step(p, *e);
      mr.edges.push_back(*e);
    }
    for (Monitor* mon : monitors) mon->after_move(st, p);
    if (p == Player::Breaker) st.clear_touched();
    if (record) record->push_back(std::move(mr));
  }
  return {st.max_component_size(), st.rounds_played(), st.maker_forfeited()};
}

}  // namespace

PlayOutcome play(GameState& st, Strategy& maker, Strategy& breaker,
                 const std::vector<Monitor*>& monitors) {
  return run(st, maker, breaker, monitors, nullptr);
}

Transcript play_recorded(GameState& st, Strategy& maker, Strategy& breaker,
                         const std::vector<Monitor*>& monitors) {
  Transcript t;
  t.graph_hash = st.graph().canonical_hash_hex();
  t.n = st.graph().vertex_count();
  t.m_edges = st.graph().edge_count();
  t.m = st.config().m;
  t.b = st.config().b;
  t.first = st.config().first;
  t.maker = maker.name();
  t.breaker = breaker.name();
  t.seed = st.config().seed;
  t.outcome = run(st, maker, breaker, monitors, &t.moves);
  return t;
}

std::string Transcript::to_jsonl() const {
  nlohmann::ordered_json header{{"graph_hash", graph_hash}, {"n", n},         {"m_edges", m_edges},
                                {"m", m},                   {"b", b},         {"first", player_name(first)},
                                {"maker", maker},           {"breaker", breaker}, {"seed", seed}};
  std::ostringstream os;
  os << header.dump() << '\n';
  for (const auto& mr : moves) {
    nlohmann::ordered_json rec{
        {"round", mr.round}, {"player", player_name(mr.player)}, {"edges", mr.edges}};
    os << rec.dump() << '\n';
  }
  nlohmann::ordered_json trailer{{"max_component", outcome.max_component},
                                 {"rounds", outcome.rounds},
                                 {"forfeited", outcome.forfeited}};
  os << trailer.dump() << '\n';
  return os.str();
}

Transcript Transcript::parse_jsonl(const std::string& text) {
  Transcript t;
  bool have_header = false, have_trailer = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  try {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto j = nlohmann::json::parse(line);
      if (j.contains("graph_hash")) {
        if (have_header) throw std::runtime_error("duplicate header");
        t.graph_hash = j.at("graph_hash").get<std::string>();
        t.n = j.at("n").get<int>();
        t.m_edges = j.at("m_edges").get<int>();
        t.m = j.at("m").get<int>();
        t.b = j.at("b").get<int>();
        t.first = require_player(j.at("first").get<std::string>());
        t.maker = j.at("maker").get<std::string>();
        t.breaker = j.at("breaker").get<std::string>();
        t.seed = j.at("seed").get<std::uint64_t>();
        have_header = true;
      } else if (j.contains("round")) {
        if (!have_header) throw std::runtime_error("move before header");
        if (have_trailer) throw std::runtime_error("move after trailer");
        MoveRecord mr;
        mr.round = j.at("round").get<int>();
        mr.player = require_player(j.at("player").get<std::string>());
        mr.edges = j.at("edges").get<std::vector<int>>();
        t.moves.push_back(std::move(mr));
      } else if (j.contains("max_component")) {
        if (!have_header) throw std::runtime_error("trailer before header");
        if (have_trailer) throw std::runtime_error("duplicate trailer");
        t.outcome.max_component = j.at("max_component").get<int>();
        t.outcome.rounds = j.at("rounds").get<int>();
        t.outcome.forfeited = j.at("forfeited").get<bool>();
        have_trailer = true;
      } else {
        throw std::runtime_error("unrecognized record");
      }
    }
    if (!have_header) throw std::runtime_error("missing header");
    if (!have_trailer) throw std::runtime_error("missing trailer");
  } catch (const std::exception& ex) {
    throw std::runtime_error("malformed transcript, line " + std::to_string(lineno) + ": " +
                             ex.what());
  }
  return t;
}

ReplayResult replay(const Graph& g, const Transcript& t) {
  if (g.canonical_hash_hex() != t.graph_hash)
    throw std::invalid_argument("replay: transcript was recorded on a different graph");
  GameConfig cfg;
  cfg.m = t.m;
  cfg.b = t.b;
  cfg.first = t.first;
  cfg.seed = t.seed;
  GameState st(g, cfg);
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const auto& mr = t.moves[i];
    for (int e : mr.edges) st.apply_step(mr.player, e);
    if (st.over() || st.turn() != mr.player) continue;
    // A short move is a Breaker pass, a Maker forfeit, or (final move of a
    // game stopped at its target size) no event at all.
    if (mr.player == Player::Breaker)
      st.pass_move(mr.player);
    else if (i + 1 < t.moves.size() || t.outcome.forfeited)
      st.forfeit(mr.player);
    else
      break;
  }
  return {{st.max_component_size(), st.rounds_played(), st.maker_forfeited()},
          st.owners()};
}

}  // namespace cg
