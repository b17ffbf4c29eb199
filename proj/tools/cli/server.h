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

#ifndef DSDLAB_TOOLS_SERVER_H
#define DSDLAB_TOOLS_SERVER_H

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "httplib.h"

struct dsdlab_session;

namespace dsdlab_cli {

struct ServerOptions {
    /// Sessions are loaded from and saved to this file when nonempty.
    std::string persist_path;
    /// Served at "/" when nonempty.
    std::string static_dir;
};

/// JSON API over the C library. Sessions live in memory; each one is guarded
/// by its own mutex so different sessions proceed in parallel.
class Server {
   public:
    explicit Server(ServerOptions options);
    ~Server();
    Server(const Server &) = delete;
    Server &operator=(const Server &) = delete;

    /// Binds to host on any free port and returns it, or -1.
    int bind_any_port(const std::string &host);
    bool bind(const std::string &host, int port);
    /// Blocks until stop().
    bool run();
    void stop();
    void wait_until_ready() const {
        http_.wait_until_ready();
    }

    /// Writes every session to the persist file, if configured.
    void save() const;

   private:
    struct Entry {
        std::mutex mutex;
        dsdlab_session *session = nullptr;
        std::string created;
        std::string updated;
        ~Entry();
    };

    void routes();
    void load();
    std::shared_ptr<Entry> find(const std::string &id) const;
    std::string insert(dsdlab_session *session, const std::string &id = "", const std::string &created = "",
                       const std::string &updated = "");

    ServerOptions options_;
    httplib::Server http_;
    mutable std::mutex store_mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

}  // namespace dsdlab_cli

#endif
