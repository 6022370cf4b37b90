#include "tictactoe/persistence.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tictactoe/errors.hpp"

namespace tictactoe {

using ordered_json = nlohmann::ordered_json;

std::string to_save_json(const GameSession& session) {
    ordered_json history = ordered_json::array();
    for (const Move& m : session.history()) history.push_back(encode_move(m));

    ordered_json doc;
    doc["version"] = kSaveFormatVersion;
    doc["mode"] = to_string(session.mode());
    doc["leadPlayer"] = std::string(1, to_char(session.lead_player()));
    doc["stats"] = {{"xWinCount", session.stats().x_wins},
                    {"oWinCount", session.stats().o_wins},
                    {"drawCount", session.stats().draws}};
    doc["history"] = std::move(history);
    doc["cursor"] = session.cursor();
    return doc.dump();
}

namespace {

const ordered_json& member(const ordered_json& obj, const char* key, const char* invariant) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InvalidSaveFile(invariant, std::string("missing \"") + key + "\"");
    return *it;
}

int integer(const ordered_json& value, const char* what, const char* invariant) {
    if (!value.is_number_integer()) {
        throw InvalidSaveFile(invariant, std::string(what) + " must be an integer");
    }
    const auto v = value.get<std::int64_t>();
    if (v < -1'000'000'000 || v > 1'000'000'000) {
        throw InvalidSaveFile(invariant, std::string(what) + " is out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

GameSession from_save_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidSaveFile("MalformedJson", e.what());
    }
    if (!doc.is_object()) throw InvalidSaveFile("MalformedJson", "top level must be an object");

    if (integer(member(doc, "version", "Version"), "version", "Version") != kSaveFormatVersion) {
        throw InvalidSaveFile("Version", "unsupported version");
    }

    const auto& mode_field = member(doc, "mode", "Mode");
    const auto mode = mode_field.is_string() ? parse_mode(mode_field.get<std::string>())
                                             : std::nullopt;
    if (!mode) throw InvalidSaveFile("Mode", "mode must be one of H2H, H2C, C2H, C2C");

    const auto& lead_field = member(doc, "leadPlayer", "LeadPlayer");
    std::optional<Mark> lead;
    if (lead_field.is_string() && lead_field.get<std::string>().size() == 1) {
        lead = mark_from_char(lead_field.get<std::string>()[0]);
    }
    if (!lead) throw InvalidSaveFile("LeadPlayer", "leadPlayer must be \"x\" or \"o\"");

    const auto& stats_field = member(doc, "stats", "Stats");
    if (!stats_field.is_object()) throw InvalidSaveFile("Stats", "stats must be an object");
    const GameStats stats{
        integer(member(stats_field, "xWinCount", "Stats"), "xWinCount", "Stats"),
        integer(member(stats_field, "oWinCount", "Stats"), "oWinCount", "Stats"),
        integer(member(stats_field, "drawCount", "Stats"), "drawCount", "Stats"),
    };

    const auto& history_field = member(doc, "history", "MoveTuple");
    if (!history_field.is_array()) throw InvalidSaveFile("MoveTuple", "history must be an array");
    std::vector<Move> history;
    for (const auto& entry : history_field) {
        if (!entry.is_string()) throw InvalidSaveFile("MoveTuple", "history entries must be strings");
        try {
            history.push_back(decode_move(entry.get<std::string>()));
        } catch (const GameError& e) {
            throw InvalidSaveFile("MoveTuple", e.what());
        }
    }

    const int cursor = integer(member(doc, "cursor", "Cursor"), "cursor", "Cursor");

    return GameSession::restore(*mode, *lead, stats, std::move(history), cursor);
}

void save_session(const GameSession& session, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_save_json(session);
    if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
}

GameSession load_session(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidSaveFile("Unreadable", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_save_json(buffer.str());
}

}  // namespace tictactoe
