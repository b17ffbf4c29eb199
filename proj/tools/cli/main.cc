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

// dsdlab command-line tool: counting tables, DSD enumeration, lattice queries,
// QM/Sets measurement transcripts and the JSON API server.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dsdlab/dsdlab.h"
#include "json.hpp"
#include "server.h"

namespace {

using Json = nlohmann::ordered_json;

// Failure carrying the process exit status.
struct Exit {
    int status;
    std::string message;
};

void check(dsdlab_status status) {
    if (status != DSDLAB_OK) {
        throw Exit{static_cast<int>(status), std::string(dsdlab_last_error_code()) + ": " + dsdlab_last_error()};
    }
}

std::string take(char *s) {
    std::string out = s == nullptr ? "" : s;
    dsdlab_free_string(s);
    return out;
}

std::string read_file(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Exit{DSDLAB_ERR_INVALID, "cannot read '" + path + "'"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A DSD argument is either inline JSON or a file path.
std::string json_arg(const std::string &arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        return arg;
    }
    return read_file(arg);
}

Json parse(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Exit{DSDLAB_ERR_INVALID, "malformed JSON in " + what + ": " + e.what()};
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// "6" stays an integer (q=2 bit encoding); "1,0,2" becomes a digit array.
std::string anchor_json(const std::string &anchor) {
    if (anchor.empty() || anchor[0] == '[') {
        return anchor;
    }
    if (anchor.find(',') == std::string::npos) {
        return anchor;
    }
    Json coords = Json::array();
    for (const auto &c : split(anchor, ',')) {
        try {
            coords.push_back(std::stoul(c));
        } catch (const std::exception &) {
            throw Exit{DSDLAB_ERR_INVALID, "bad anchor coordinate '" + c + "'"};
        }
    }
    return coords.dump();
}

class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) {
                throw Exit{DSDLAB_ERR_INVALID, "cannot write '" + path + "'"};
            }
        }
    }
    std::ostream &stream() {
        return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout;
    }

   private:
    std::ofstream file_;
};

struct CountArgs {
    uint32_t q = 2;
    std::optional<uint32_t> n;
    std::optional<uint32_t> m;
    bool star = false;
    bool table = false;
    std::string format = "csv";
    std::string oeis;
};

int run_count(const CountArgs &a) {
    char *out = nullptr;
    if (!a.oeis.empty()) {
        check(dsdlab_oeis(a.oeis.c_str(), a.n.value_or(7), &out));
        std::cout << take(out) << '\n';
        return 0;
    }
    if (a.table) {
        check(dsdlab_count_table(a.q, a.n.value_or(7), a.star, a.format.c_str(), &out));
        std::cout << take(out);
        return 0;
    }
    if (!a.n.has_value()) {
        throw Exit{DSDLAB_ERR_INVALID, "count needs --n (or --table / --oeis)"};
    }
    check(dsdlab_count(a.q, *a.n, a.m.has_value() ? static_cast<int32_t>(*a.m) : -1, a.star, &out));
    std::cout << take(out) << '\n';
    return 0;
}

struct EnumArgs {
    uint32_t q = 2;
    uint32_t n = 0;
    std::optional<uint32_t> m;
    std::string anchor;
    bool count_only = false;
    bool force = false;
    std::string out;
};

int run_enum(const EnumArgs &a) {
    const std::string anchor = anchor_json(a.anchor);
    const char *anchor_ptr = anchor.empty() ? nullptr : anchor.c_str();
    const int32_t m = a.m.has_value() ? static_cast<int32_t>(*a.m) : -1;
    Output output(a.out);
    if (a.count_only) {
        uint64_t count = 0;
        check(dsdlab_enum_count(a.q, a.n, m, anchor_ptr, a.force, &count));
        output.stream() << count << '\n';
        return 0;
    }
    std::ostream *stream = &output.stream();
    check(dsdlab_enum_visit(
        a.q, a.n, m, anchor_ptr, a.force,
        [](const char *dsd, void *user) {
            *static_cast<std::ostream *>(user) << dsd << '\n';
            return 1;
        },
        stream));
    return 0;
}

struct LatticeArgs {
    std::string op;
    std::vector<std::string> inputs;
    std::string omega;
};

int run_lattice(const LatticeArgs &a) {
    const bool unary = a.op == "validate" || a.op == "atoms" || a.op == "maximal_above";
    const size_t needed = unary ? 1 : 2;
    if (a.inputs.size() != needed) {
        throw Exit{DSDLAB_ERR_INVALID,
                   "lattice " + a.op + " takes " + std::to_string(needed) + " DSD input(s)"};
    }
    if (a.op == "implies" && a.omega.empty()) {
        throw Exit{DSDLAB_ERR_INVALID, "lattice implies needs --omega"};
    }
    const std::string first = json_arg(a.inputs[0]);
    const std::string second = unary ? "" : json_arg(a.inputs[1]);
    const std::string omega = a.omega.empty() ? "" : json_arg(a.omega);
    char *out = nullptr;
    check(dsdlab_lattice(a.op.c_str(), first.c_str(), unary ? nullptr : second.c_str(),
                         omega.empty() ? nullptr : omega.c_str(), &out));
    std::cout << take(out) << '\n';
    return 0;
}

struct MeasureArgs {
    std::string script;
    std::string attrs;
    std::string space;
    std::optional<std::string> state;
    std::optional<uint64_t> seed;
    std::string steps;
    bool interactive = false;
    bool check_replay = false;
    std::string out;
};

Json build_script(const MeasureArgs &a) {
    Json script = a.script.empty() ? Json::object() : parse(read_file(a.script), a.script);
    if (!script.is_object()) {
        throw Exit{DSDLAB_ERR_INVALID, "script must be a JSON object"};
    }
    script.erase("records");
    script.erase("final_state");
    if (!a.attrs.empty()) {
        Json attrs = parse(read_file(a.attrs), a.attrs);
        Json table = attrs;
        if (attrs.is_object() && attrs.contains("attributes")) {
            table = attrs.at("attributes");
            if (attrs.contains("space") && !script.contains("space")) {
                script["space"] = attrs.at("space");
            }
        }
        if (!table.is_object()) {
            throw Exit{DSDLAB_ERR_INVALID, "attribute file must map ids to values"};
        }
        if (!script.contains("attributes")) {
            script["attributes"] = Json::object();
        }
        for (auto &[id, values] : table.items()) {
            script["attributes"][id] = values;
        }
    }
    if (!a.space.empty()) {
        script["space"] = split(a.space, ',');
    }
    if (!script.contains("space")) {
        throw Exit{DSDLAB_ERR_INVALID, "measure needs a sample space (--space, --attrs or --script)"};
    }
    if (a.state.has_value()) {
        script["initial_state"] = split(*a.state, ',');
    }
    if (a.seed.has_value()) {
        script["seed"] = *a.seed;
    }
    if (!a.steps.empty()) {
        Json steps = Json::array();
        for (const auto &step : split(a.steps, ',')) {
            const auto eq = step.find('=');
            if (eq == std::string::npos) {
                steps.push_back(Json{{"attribute", step}, {"forced_outcome", nullptr}});
            } else {
                steps.push_back(Json{{"attribute", step.substr(0, eq)}, {"forced_outcome", step.substr(eq + 1)}});
            }
        }
        script["steps"] = steps;
    }
    return script;
}

void interactive_loop(dsdlab_session *session) {
    auto show_state = [&] {
        char *out = nullptr;
        check(dsdlab_session_json(session, &out));
        const Json view = Json::parse(take(out));
        std::cerr << "state: " << view.at("state").dump() << '\n';
        for (const auto &[id, values] : view.at("attributes").items()) {
            char *born = nullptr;
            const std::string key = Json(id).dump();
            if (dsdlab_session_preview(session, key.c_str(), &born) == DSDLAB_OK) {
                std::cerr << "  " << id << "  born " << take(born) << '\n';
            }
        }
    };
    std::cerr << "commands: <attribute> [forced outcome] | reset | state | quit\n";
    show_state();
    std::string line;
    while (std::cerr << "> " << std::flush, std::getline(std::cin, line)) {
        const auto words = split(line, ' ');
        if (words.empty()) {
            continue;
        }
        if (words[0] == "quit" || words[0] == "q") {
            break;
        }
        if (words[0] == "state") {
            show_state();
            continue;
        }
        if (words[0] == "reset") {
            check(dsdlab_session_reset(session));
            show_state();
            continue;
        }
        Json req = {{"attribute", words[0]}};
        if (words.size() > 1) {
            req["forced_outcome"] = words[1];
        }
        char *out = nullptr;
        const std::string body = req.dump();
        const dsdlab_status status = dsdlab_session_measure(session, body.c_str(), &out);
        if (status != DSDLAB_OK) {
            std::cerr << "error: " << dsdlab_last_error_code() << ": " << dsdlab_last_error() << '\n';
            continue;
        }
        const Json result = Json::parse(take(out));
        const Json &record = result.at("record");
        std::cerr << "outcome " << record.at("eigenvalue").get<std::string>() << " with probability "
                  << record.at("probability").get<std::string>() << '\n';
        show_state();
    }
}

int run_measure(const MeasureArgs &a) {
    const Json script = build_script(a);
    const std::string text = script.dump();
    dsdlab_session *session = nullptr;
    check(dsdlab_session_from_script(text.c_str(), &session));
    std::unique_ptr<dsdlab_session, void (*)(dsdlab_session *)> guard(session, dsdlab_session_destroy);
    if (a.interactive) {
        interactive_loop(session);
    }
    char *out = nullptr;
    check(dsdlab_session_transcript(session, &out));
    const std::string transcript = take(out);
    if (a.check_replay) {
        const std::string original = read_file(a.script);
        if (original != transcript) {
            Output(a.out).stream() << transcript;
            throw Exit{1, "replay differs from '" + a.script + "'"};
        }
    }
    Output(a.out).stream() << transcript;
    return 0;
}

struct ServeArgs {
    std::string bind = "127.0.0.1";
    int port = 8080;
    std::string persist;
    std::string static_dir;
};

int run_serve(const ServeArgs &a) {
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    dsdlab_cli::Server server({a.persist, a.static_dir});
    int port = a.port;
    if (port == 0) {
        port = server.bind_any_port(a.bind);
        if (port < 0) {
            throw Exit{DSDLAB_ERR_INVALID, "cannot bind " + a.bind};
        }
    } else if (!server.bind(a.bind, port)) {
        throw Exit{DSDLAB_ERR_INVALID, "cannot bind " + a.bind + ":" + std::to_string(port)};
    }
    std::thread waiter([&] {
        int sig = 0;
        sigwait(&signals, &sig);
        server.stop();
    });
    std::cerr << "listening on http://" << a.bind << ":" << port << std::endl;
    server.run();
    // Wake the waiter if the server stopped on its own.
    if (waiter.joinable()) {
        pthread_kill(waiter.native_handle(), SIGTERM);
        waiter.join();
    }
    server.save();
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Direct-sum decomposition lab: counting, enumeration, lattice and QM/Sets measurement"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dsdlab_version());

    CountArgs count;
    auto *count_cmd = app.add_subcommand("count", "D_q(n,m), D*_q(n,m), their totals, tables and OEIS terms");
    count_cmd->add_option("--q", count.q, "field size (any integer >= 1)")->capture_default_str();
    count_cmd->add_option("--n", count.n, "dimension (max row for --table / --oeis, default 7)");
    count_cmd->add_option("--m", count.m, "number of blocks; omit for the total");
    count_cmd->add_flag("--star", count.star, "count DSDs with a block containing a fixed nonzero vector");
    count_cmd->add_flag("--table", count.table, "print rows n = 0..N");
    count_cmd->add_option("--format", count.format, "table format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    count_cmd->add_option("--oeis", count.oeis, "emit terms of A053601, A270880, A270881, A270882 or A270883");

    EnumArgs enumerate;
    auto *enum_cmd = app.add_subcommand("enum", "enumerate DSDs as JSON lines in canonical order");
    enum_cmd->add_option("--q", enumerate.q, "prime field size")->capture_default_str();
    enum_cmd->add_option("--n", enumerate.n, "dimension")->required();
    enum_cmd->add_option("--m", enumerate.m, "number of blocks");
    enum_cmd->add_option("--anchor", enumerate.anchor,
                         "keep DSDs with a block containing this vector (integer bits for q=2, or digits 1,0,2)");
    enum_cmd->add_flag("--count-only", enumerate.count_only, "print only the number of DSDs");
    enum_cmd->add_flag("--force", enumerate.force, "ignore the enumeration ceiling");
    enum_cmd->add_option("--out", enumerate.out, "output file (default stdout)");

    LatticeArgs lattice;
    auto *lattice_cmd = app.add_subcommand("lattice", "lattice operations on DSD JSON files or inline JSON");
    lattice_cmd
        ->add_option("op", lattice.op, "join, meet, proto_join, compat, refines, implies, validate, atoms, maximal_above")
        ->required()
        ->check(CLI::IsMember(
            {"join", "meet", "proto_join", "compat", "refines", "implies", "validate", "atoms", "maximal_above"}));
    lattice_cmd->add_option("inputs", lattice.inputs, "DSD inputs")->required();
    lattice_cmd->add_option("--omega", lattice.omega, "maximal DSD fixing the partition logic (implies)");

    MeasureArgs measure;
    auto *measure_cmd = app.add_subcommand("measure", "run a QM/Sets measurement script and print its transcript");
    measure_cmd->add_option("--script", measure.script, "script or transcript JSON");
    measure_cmd->add_option("--attrs", measure.attrs, "attribute file: {id: {label: value}} or {space, attributes}");
    measure_cmd->add_option("--space", measure.space, "comma-separated outcome labels");
    measure_cmd->add_option("--state", measure.state, "comma-separated initial state (default: whole space)");
    measure_cmd->add_option("--seed", measure.seed, "64-bit seed for the splitmix64 stream");
    measure_cmd->add_option("--steps", measure.steps, "steps as id or id=forced_outcome, comma-separated");
    measure_cmd->add_flag("--interactive", measure.interactive, "prompt for further steps on stdin");
    measure_cmd->add_flag("--check", measure.check_replay, "fail unless the output equals the --script file");
    measure_cmd->add_option("--out", measure.out, "transcript file (default stdout)");

    ServeArgs serve;
    auto *serve_cmd = app.add_subcommand("serve", "JSON API for measurement sessions, counts and enumeration");
    serve_cmd->add_option("--bind", serve.bind, "address")->capture_default_str();
    serve_cmd->add_option("--port", serve.port, "port (0 picks a free one)")->capture_default_str();
    serve_cmd->add_option("--persist", serve.persist, "session snapshot file, loaded at start and saved on exit");
    serve_cmd->add_option("--static", serve.static_dir, "directory served at /");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : DSDLAB_ERR_INVALID;
    }

    try {
        if (count_cmd->parsed()) {
            return run_count(count);
        }
        if (enum_cmd->parsed()) {
            return run_enum(enumerate);
        }
        if (lattice_cmd->parsed()) {
            return run_lattice(lattice);
        }
        if (measure_cmd->parsed()) {
            return run_measure(measure);
        }
        if (serve_cmd->parsed()) {
            return run_serve(serve);
        }
    } catch (const Exit &e) {
        std::cerr << "error: " << e.message << '\n';
        return e.status;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return DSDLAB_ERR_INTERNAL;
    }
    return DSDLAB_ERR_INVALID;
}
