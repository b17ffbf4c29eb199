// Copyright 2026 The dsdlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "server.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "dsdlab/dsdlab.h"
#include "json.hpp"

namespace dsdlab_cli {

namespace {

using Json = nlohmann::ordered_json;

struct ApiError {
    int status;
    std::string code;
    std::string message;
};

std::string now_utc() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string new_id() {
    static std::mutex mutex;
    static std::mt19937_64 gen{std::random_device{}()};
    std::lock_guard<std::mutex> lock(mutex);
    std::ostringstream out;
    out << std::hex;
    for (int i = 0; i < 2; i++) {
        uint64_t word = gen();
        for (int k = 0; k < 16; k++) {
            out << ((word >> (60 - 4 * k)) & 0xF);
        }
    }
    return out.str();
}

ApiError last_api_error(dsdlab_status status) {
    const std::string code = dsdlab_last_error_code();
    int http = 400;
    if (status == DSDLAB_ERR_EMPTY_STATE) {
        http = 409;
    } else if (status == DSDLAB_ERR_INTERNAL) {
        http = 500;
    }
    return ApiError{http, code.empty() ? "Internal" : code, dsdlab_last_error()};
}

void check(dsdlab_status status) {
    if (status != DSDLAB_OK) {
        throw last_api_error(status);
    }
}

// Takes ownership of a string produced by the library.
std::string take(char *s) {
    std::string out = s == nullptr ? "" : s;
    dsdlab_free_string(s);
    return out;
}

Json parse_body(const httplib::Request &req) {
    if (req.body.empty()) {
        return Json::object();
    }
    try {
        return Json::parse(req.body);
    } catch (const Json::parse_error &e) {
        throw ApiError{400, "Parse", std::string("malformed JSON body: ") + e.what()};
    }
}

uint64_t parse_uint(const std::string &text, const char *name) {
    try {
        size_t used = 0;
        const unsigned long long v = std::stoull(text, &used, 10);
        if (used == text.size() && !text.empty() && text[0] != '-') {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw ApiError{400, "InvalidArgument", std::string(name) + " must be a nonnegative integer"};
}

uint64_t query_uint(const httplib::Request &req, const char *name, std::optional<uint64_t> fallback = {}) {
    if (!req.has_param(name)) {
        if (fallback.has_value()) {
            return *fallback;
        }
        throw ApiError{400, "InvalidArgument", std::string("missing query parameter ") + name};
    }
    return parse_uint(req.get_param_value(name), name);
}

bool query_flag(const httplib::Request &req, const char *name) {
    if (!req.has_param(name)) {
        return false;
    }
    const std::string v = req.get_param_value(name);
    return v.empty() || v == "1" || v == "true";
}

void send(httplib::Response &res, const std::string &json, int status = 200) {
    res.status = status;
    res.set_content(json, "application/json");
}

void send_error(httplib::Response &res, const ApiError &e) {
    send(res, Json{{"code", e.code}, {"message", e.message}}.dump(), e.status);
}

// Wraps a handler so that every failure becomes a {code, message} body.
template <typename F>
httplib::Server::Handler api(F body) {
    return [body](const httplib::Request &req, httplib::Response &res) {
        try {
            body(req, res);
        } catch (const ApiError &e) {
            send_error(res, e);
        } catch (const Json::exception &e) {
            send_error(res, ApiError{400, "Parse", e.what()});
        } catch (const std::exception &e) {
            send_error(res, ApiError{500, "Internal", e.what()});
        }
    };
}

std::string default_labels_json(uint64_t n) {
    if (n > 64) {
        throw ApiError{400, "CeilingExceeded", "attribute suggestions are limited to n <= 10"};
    }
    Json labels = Json::array();
    for (uint64_t i = 1; i <= n; i++) {
        labels.push_back("u" + std::to_string(i));
    }
    return labels.dump();
}

}  // namespace

Server::Entry::~Entry() {
    dsdlab_session_destroy(session);
}

Server::Server(ServerOptions options) : options_(std::move(options)) {
    routes();
    load();
}

Server::~Server() {
    stop();
}

int Server::bind_any_port(const std::string &host) {
    return http_.bind_to_any_port(host);
}

bool Server::bind(const std::string &host, int port) {
    return http_.bind_to_port(host, port);
}

bool Server::run() {
    return http_.listen_after_bind();
}

void Server::stop() {
    if (http_.is_running()) {
        http_.stop();
    }
}

std::shared_ptr<Server::Entry> Server::find(const std::string &id) const {
    std::lock_guard<std::mutex> lock(store_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        throw ApiError{404, "NotFound", "no session '" + id + "'"};
    }
    return it->second;
}

std::string Server::insert(dsdlab_session *session, const std::string &id, const std::string &created,
                           const std::string &updated) {
    auto entry = std::make_shared<Entry>();
    entry->session = session;
    entry->created = created.empty() ? now_utc() : created;
    entry->updated = updated.empty() ? entry->created : updated;
    std::lock_guard<std::mutex> lock(store_mutex_);
    std::string key = id;
    while (key.empty() || sessions_.count(key)) {
        key = new_id();
    }
    sessions_.emplace(key, std::move(entry));
    return key;
}

void Server::load() {
    if (options_.persist_path.empty()) {
        return;
    }
    std::ifstream in(options_.persist_path);
    if (!in) {
        return;
    }
    const Json saved = Json::parse(in);
    for (const auto &item : saved.at("sessions")) {
        dsdlab_session *session = nullptr;
        const std::string script = item.at("transcript").dump();
        if (dsdlab_session_from_script(script.c_str(), &session) != DSDLAB_OK) {
            throw std::runtime_error("cannot restore session " + item.at("id").get<std::string>() + ": " +
                                     dsdlab_last_error());
        }
        insert(session, item.at("id").get<std::string>(), item.value("created", ""), item.value("updated", ""));
    }
}

void Server::save() const {
    if (options_.persist_path.empty()) {
        return;
    }
    Json list = Json::array();
    std::lock_guard<std::mutex> lock(store_mutex_);
    for (const auto &[id, entry] : sessions_) {
        std::lock_guard<std::mutex> entry_lock(entry->mutex);
        char *transcript = nullptr;
        check(dsdlab_session_transcript(entry->session, &transcript));
        list.push_back(Json{{"id", id},
                            {"created", entry->created},
                            {"updated", entry->updated},
                            {"transcript", Json::parse(take(transcript))}});
    }
    std::ofstream out(options_.persist_path);
    out << Json{{"sessions", list}}.dump(2) << '\n';
}

void Server::routes() {
    http_.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    http_.Options(".*", [](const httplib::Request &, httplib::Response &res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });

    auto session_view = [](const std::string &id, Entry &entry) {
        char *out = nullptr;
        check(dsdlab_session_json(entry.session, &out));
        Json view = Json{{"id", id}, {"created", entry.created}, {"updated", entry.updated}};
        const Json body = Json::parse(take(out));
        for (auto &[k, v] : body.items()) {
            view[k] = v;
        }
        return view;
    };

    http_.Post("/api/session", api([this](const httplib::Request &req, httplib::Response &res) {
                   Json body = parse_body(req);
                   if (!body.is_object() || !body.contains("space")) {
                       throw ApiError{400, "InvalidArgument", "session needs a \"space\" label array"};
                   }
                   dsdlab_session *session = nullptr;
                   const std::string script = body.dump();
                   check(dsdlab_session_from_script(script.c_str(), &session));
                   const std::string id = insert(session);
                   auto entry = find(id);
                   std::lock_guard<std::mutex> lock(entry->mutex);
                   char *out = nullptr;
                   check(dsdlab_session_json(entry->session, &out));
                   const Json view = Json::parse(take(out));
                   send(res,
                        Json{{"id", id}, {"seed", view.at("seed")}, {"state", view.at("state")}}.dump(), 201);
               }));

    http_.Get("/api/session/:id", api([this, session_view](const httplib::Request &req, httplib::Response &res) {
                  const std::string id = req.path_params.at("id");
                  auto entry = find(id);
                  std::lock_guard<std::mutex> lock(entry->mutex);
                  send(res, session_view(id, *entry).dump());
              }));

    http_.Delete("/api/session/:id", api([this](const httplib::Request &req, httplib::Response &res) {
                     const std::string id = req.path_params.at("id");
                     find(id);
                     std::lock_guard<std::mutex> lock(store_mutex_);
                     sessions_.erase(id);
                     res.status = 204;
                 }));

    http_.Get("/api/session/:id/transcript", api([this](const httplib::Request &req, httplib::Response &res) {
                  auto entry = find(req.path_params.at("id"));
                  std::lock_guard<std::mutex> lock(entry->mutex);
                  char *out = nullptr;
                  check(dsdlab_session_transcript(entry->session, &out));
                  send(res, take(out));
              }));

    http_.Post("/api/session/:id/measure", api([this](const httplib::Request &req, httplib::Response &res) {
                   auto entry = find(req.path_params.at("id"));
                   std::lock_guard<std::mutex> lock(entry->mutex);
                   char *out = nullptr;
                   check(dsdlab_session_measure(entry->session, req.body.c_str(), &out));
                   entry->updated = now_utc();
                   send(res, take(out));
               }));

    http_.Post("/api/session/:id/preview", api([this](const httplib::Request &req, httplib::Response &res) {
                   auto entry = find(req.path_params.at("id"));
                   const Json body = parse_body(req);
                   if (!body.contains("attribute")) {
                       throw ApiError{400, "InvalidArgument", "preview needs an \"attribute\""};
                   }
                   const std::string attribute = body.at("attribute").dump();
                   std::lock_guard<std::mutex> lock(entry->mutex);
                   char *out = nullptr;
                   check(dsdlab_session_preview(entry->session, attribute.c_str(), &out));
                   send(res, Json{{"born", Json::parse(take(out))}}.dump());
               }));

    http_.Post("/api/session/:id/reset", api([this, session_view](const httplib::Request &req, httplib::Response &res) {
                   const std::string id = req.path_params.at("id");
                   auto entry = find(id);
                   std::lock_guard<std::mutex> lock(entry->mutex);
                   check(dsdlab_session_reset(entry->session));
                   entry->updated = now_utc();
                   send(res, session_view(id, *entry).dump());
               }));

    http_.Get("/api/count", api([](const httplib::Request &req, httplib::Response &res) {
                  const uint64_t q = query_uint(req, "q", 2);
                  const uint64_t n = query_uint(req, "n");
                  const bool star = query_flag(req, "star");
                  if (q > UINT32_MAX || n > 1000) {
                      throw ApiError{400, "InvalidArgument", "q or n out of range"};
                  }
                  char *out = nullptr;
                  if (query_flag(req, "table")) {
                      check(dsdlab_count_table(static_cast<uint32_t>(q), static_cast<uint32_t>(n), star, "json", &out));
                      send(res, take(out));
                      return;
                  }
                  const bool has_m = req.has_param("m");
                  const uint64_t m = has_m ? query_uint(req, "m") : 0;
                  if (m > 1000) {
                      throw ApiError{400, "InvalidArgument", "m out of range"};
                  }
                  check(dsdlab_count(static_cast<uint32_t>(q), static_cast<uint32_t>(n),
                                     has_m ? static_cast<int32_t>(m) : -1, star, &out));
                  Json body = {{"q", q}, {"n", n}, {"m", has_m ? Json(m) : Json()}, {"star", star},
                               {"value", take(out)}};
                  send(res, body.dump());
              }));

    http_.Get("/api/enum", api([](const httplib::Request &req, httplib::Response &res) {
                  const uint64_t q = query_uint(req, "q", 2);
                  const uint64_t n = query_uint(req, "n");
                  const bool has_m = req.has_param("m");
                  const uint64_t m = has_m ? query_uint(req, "m") : 0;
                  const uint64_t limit = query_uint(req, "limit", 1000);
                  if (q > UINT32_MAX || n > 64 || m > 64) {
                      throw ApiError{400, "InvalidArgument", "q, n or m out of range"};
                  }
                  const std::string anchor = req.has_param("anchor") ? req.get_param_value("anchor") : "";
                  struct Collect {
                      Json list = Json::array();
                      uint64_t count = 0;
                      uint64_t limit = 0;
                  } collect;
                  collect.limit = limit;
                  check(dsdlab_enum_visit(
                      static_cast<uint32_t>(q), static_cast<uint32_t>(n), has_m ? static_cast<int32_t>(m) : -1,
                      anchor.empty() ? nullptr : anchor.c_str(), 0,
                      [](const char *dsd, void *user) {
                          auto *c = static_cast<Collect *>(user);
                          if (c->count++ < c->limit) {
                              c->list.push_back(Json::parse(dsd));
                          }
                          return 1;
                      },
                      &collect));
                  send(res, Json{{"count", collect.count},
                                 {"truncated", collect.count > limit},
                                 {"dsds", collect.list}}
                                .dump());
              }));

    http_.Get("/api/attributes/suggest", api([](const httplib::Request &req, httplib::Response &res) {
                  std::string space;
                  if (req.has_param("space")) {
                      Json labels = Json::array();
                      std::stringstream in(req.get_param_value("space"));
                      std::string label;
                      while (std::getline(in, label, ',')) {
                          labels.push_back(label);
                      }
                      space = labels.dump();
                  } else {
                      space = default_labels_json(query_uint(req, "n"));
                  }
                  char *out = nullptr;
                  check(dsdlab_suggest_attributes(space.c_str(), &out));
                  send(res, take(out));
              }));

    if (!options_.static_dir.empty()) {
        if (!http_.set_mount_point("/", options_.static_dir)) {
            throw std::runtime_error("static directory '" + options_.static_dir + "' does not exist");
        }
    }
}

}  // namespace dsdlab_cli
