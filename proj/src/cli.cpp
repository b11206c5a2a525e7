#include "sgp/cli.hpp"

#include <atomic>      // for atomic
#include <cstdlib>     // for getenv
#include <filesystem>  // for create_directories, path
#include <functional>  // for function
#include <iomanip>     // for setw, setfill
#include <optional>    // for optional
#include <ostream>     // for ostream
#include <sstream>     // for ostringstream
#include <thread>      // for thread

#include <CLI11.hpp>
#include <json.hpp>

#include "sgp/analysis.hpp"
#include "sgp/catalog.hpp"
#include "sgp/error.hpp"
#include "sgp/io.hpp"
#include "sgp/morphisms.hpp"
#include "sgp/rees.hpp"
#include "sgp/relations.hpp"
#include "sgp/theorems.hpp"

namespace sgp::cli {

  namespace {
    using json = nlohmann::ordered_json;

    struct Outcome {
      std::string                status = "OK";
      int                        code   = success;
      std::string                text;
      json                       inputs = json::object();
      json                       data   = json::object();
      std::optional<std::string> witness;
    };

    // Raised for bad flags or inputs; reported on stderr with exit code 2.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct LoadedTable {
      std::string path;
      Semigroup   semigroup;
    };

    LoadedTable load(std::string const& path) {
      try {
        Semigroup S = read_table_file(path);
        return {path, std::move(S)};
      } catch (Error const& e) {
        throw UsageError(path + ": " + e.what());
      }
    }

    std::uint64_t seed_from_environment() {
      char const* raw = std::getenv("SGP_SEED");
      if (raw == nullptr || *raw == '\0') {
        return 0;
      }
      try {
        std::size_t   used  = 0;
        std::uint64_t value = std::stoull(raw, &used);
        if (raw[used] != '\0') {
          throw UsageError("");
        }
        return value;
      } catch (std::exception const&) {
        throw UsageError(std::string("SGP_SEED must be a non-negative integer, got '") + raw + "'");
      }
    }

    std::vector<element_id> to_elements(std::vector<std::size_t> const& v) {
      return {v.begin(), v.end()};
    }

    // Runs tasks on up to `jobs` threads; results keep the task order.
    template <typename T>
    std::vector<T> run_tasks(std::vector<std::function<T()>> const& tasks, std::size_t jobs) {
      std::vector<std::optional<T>>   results(tasks.size());
      std::vector<std::exception_ptr> errors(tasks.size());
      std::atomic<std::size_t>        next{0};
      auto                            worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
          try {
            results[k].emplace(tasks[k]());
          } catch (...) {
            errors[k] = std::current_exception();
          }
        }
      };
      std::size_t const        threads = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
      std::vector<std::thread> pool;
      for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& th : pool) {
        th.join();
      }
      std::vector<T> out;
      for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (errors[k]) {
          std::rethrow_exception(errors[k]);
        }
        out.push_back(std::move(*results[k]));
      }
      return out;
    }

    Congruence congruence_from_spec(Semigroup const& S, std::string const& spec) {
      if (spec == "identity") {
        return identity_congruence(S);
      }
      if (spec == "universal") {
        return universal_congruence(S);
      }
      if (spec == "theta") {
        return theta(S);
      }
      if (spec.rfind("theta:", 0) == 0) {
        auto const k = parse_index_list(spec.substr(6));
        if (k.size() != 1) {
          throw UsageError("theta:<k> takes a single level");
        }
        return theta_power(S, k[0]);
      }
      return make_congruence(S, parse_index_list(spec));
    }

    Outcome cmd_validate(std::string const& path) {
      Outcome o;
      o.inputs["file"] = path;
      try {
        Semigroup const S = read_table_file(path);
        o.status          = "PASS";
        o.data["order"]   = S.order();
        o.text            = "valid semigroup of order " + std::to_string(S.order()) + "\n";
      } catch (Error const& e) {
        if (e.code() == ErrorCode::parse_error) {
          throw UsageError(path + ": " + e.what());
        }
        o.status          = "FAIL";
        o.code            = failure;
        o.witness         = e.what();
        o.data["error"]   = error_code_name(e.code());
        o.data["where"]   = e.where();
        o.text            = std::string(e.what()) + "\n";
      }
      return o;
    }

    Outcome cmd_props(std::string const& path, std::string const& property) {
      auto const [file, S] = load(path);
      Outcome    o;
      o.inputs["file"] = file;
      std::vector<Property> props;
      if (property.empty()) {
        props = all_properties();
      } else {
        auto p = property_from_name(property);
        if (!p) {
          throw UsageError("unknown property '" + property + "'");
        }
        props.push_back(*p);
        o.inputs["property"] = property;
      }
      std::ostringstream text;
      for (auto p : props) {
        bool const value                         = check_property(S, p);
        o.data[std::string(property_name(p))] = value;
        text << property_name(p) << ": " << (value ? "true" : "false") << "\n";
      }
      o.text = text.str();
      return o;
    }

    Outcome cmd_theta(std::string const& path, std::size_t depth, std::string const& base) {
      auto const [file, S] = load(path);
      Outcome o;
      o.inputs["file"]  = file;
      o.inputs["depth"] = depth;
      o.inputs["base"]  = base;
      Tower const        tw = tower(S, congruence_from_spec(S, base), depth);
      std::ostringstream text;
      json               levels = json::array();
      for (auto const& level : tw.levels) {
        text << render_indices(level.labels()) << "\n";
        levels.push_back(level.labels());
      }
      text << "stabilized at level " << tw.stabilization_index << "\n";
      o.data["levels"]              = levels;
      o.data["stabilization_index"] = tw.stabilization_index;
      o.text                        = text.str();
      return o;
    }

    Outcome cmd_quotient(std::string const& path, std::string const& spec, std::string const& out) {
      auto const [file, S] = load(path);
      Outcome o;
      o.inputs["file"]       = file;
      o.inputs["congruence"] = spec;
      Congruence const alpha = congruence_from_spec(S, spec);
      Quotient const   Q     = quotient(S, alpha);
      std::string const comment = "projection " + render_indices(Q.projection.map());
      o.data["congruence"]      = alpha.labels();
      o.data["projection"]      = Q.projection.map();
      o.data["table"]           = Q.semigroup.table();
      if (!out.empty()) {
        write_table_file(out, Q.semigroup, comment);
        o.inputs["out"] = out;
        o.text = "wrote quotient of order " + std::to_string(Q.semigroup.order()) + " to " + out
                 + "\n" + comment + "\n";
      } else {
        o.text = "# " + comment + "\n" + render_table(Q.semigroup);
      }
      return o;
    }

    Outcome cmd_rees(std::string const& path, std::string const& sandwich, std::string const& out) {
      auto const [file, S] = load(path);
      Outcome o;
      o.inputs["file"]     = file;
      o.inputs["sandwich"] = sandwich;
      ReesSemigroup const M = rees(S, SandwichVector(S, to_elements(parse_index_list(sandwich))));
      std::string const   comment
          = "M(S; Lambda; P) with |Lambda| = " + std::to_string(M.lambda_size())
            + ", element (s,l) has index s*" + std::to_string(M.lambda_size()) + "+l";
      json pairs = json::array();
      for (element_id e = 0; e < M.semigroup().order(); ++e) {
        pairs.push_back(pair_string(M, e));
      }
      o.data["order"] = M.semigroup().order();
      o.data["pairs"] = pairs;
      o.data["table"] = M.semigroup().table();
      if (!out.empty()) {
        write_table_file(out, M.semigroup(), comment);
        o.inputs["out"] = out;
        o.text = "wrote Rees matrix semigroup of order " + std::to_string(M.semigroup().order())
                 + " to " + out + "\n";
      } else {
        o.text = "# " + comment + "\n" + render_table(M.semigroup());
      }
      return o;
    }

    Outcome cmd_iso(std::string const& left, std::string const& right) {
      auto const A = load(left);
      auto const B = load(right);
      Outcome    o;
      o.inputs["files"] = {A.path, B.path};
      auto const f      = find_isomorphism(A.semigroup, B.semigroup);
      if (f) {
        o.status               = "PASS";
        o.data["isomorphism"]  = f->map();
        o.text                 = render_indices(f->map()) + "\n";
      } else {
        o.status              = "FAIL";
        o.code                = failure;
        o.data["isomorphism"] = nullptr;
        o.witness             = "no isomorphism exists";
        o.text                = "not isomorphic\n";
      }
      return o;
    }

    json report_json(Report const& r, std::string const& file) {
      json        j;
      std::size_t passed = 0, failed = 0, skipped = 0;
      json        notable = json::array();
      for (auto const& c : r.checks()) {
        switch (c.status) {
          case Status::pass:
            ++passed;
            continue;
          case Status::fail:
            ++failed;
            break;
          case Status::skipped_precondition:
            ++skipped;
            break;
        }
        notable.push_back({{"name", c.name},
                           {"status", std::string(status_name(c.status))},
                           {"detail", c.detail}});
      }
      j["file"]    = file;
      j["theorem"] = r.theorem_id();
      j["inputs"]  = r.inputs_summary();
      j["status"]  = std::string(status_name(r.status()));
      j["witness"] = r.witness() ? json(*r.witness()) : json(nullptr);
      j["checks"]  = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
      j["not_passed"] = notable;
      return j;
    }

    struct VerifyOptions {
      std::string              theorem;
      std::vector<std::string> files;
      std::size_t              depth = 2;
      std::string              sandwich;
      std::string              target;
      std::string              tau;
    };

    Outcome cmd_verify(VerifyOptions const& opt, std::size_t jobs) {
      std::vector<LoadedTable> tables;
      for (auto const& f : opt.files) {
        tables.push_back(load(f));
      }
      std::uint64_t const seed = seed_from_environment();

      struct Task {
        std::string file;
        std::function<Report()> run;
      };
      std::vector<Task> tasks;

      auto sandwiches = [&](Semigroup const& S) {
        if (!opt.sandwich.empty()) {
          return std::vector<SandwichVector>{
              SandwichVector(S, to_elements(parse_index_list(opt.sandwich)))};
        }
        return sandwich_sweep(S, {1, 2}, seed);
      };

      std::string const& id = opt.theorem;
      if (id == "sequence") {
        if (opt.depth == 0) {
          throw UsageError("--depth must be at least 1");
        }
        for (auto const& t : tables) {
          Semigroup const S     = t.semigroup;
          std::size_t     depth = opt.depth;
          tasks.push_back({t.path, [S, depth] { return verify_sequence(S, depth); }});
        }
      } else if (id == "equalizer") {
        for (auto const& t : tables) {
          Semigroup const S = t.semigroup;
          tasks.push_back({t.path, [S] { return verify_equalizer(S); }});
        }
      } else if (id.rfind("hereditary:", 0) == 0) {
        auto const p = property_from_name(id.substr(11));
        auto const allowed = hereditary_properties();
        if (!p || std::find(allowed.begin(), allowed.end(), *p) == allowed.end()) {
          throw UsageError("unsupported hereditary property '" + id.substr(11) + "'");
        }
        for (auto const& t : tables) {
          for (auto const& P : sandwiches(t.semigroup)) {
            Semigroup const S    = t.semigroup;
            Property const  prop = *p;
            tasks.push_back({t.path, [S, prop, P] { return verify_hereditary(prop, S, P); }});
          }
        }
      } else if (id == "embedding") {
        if (opt.target.empty() || opt.tau.empty()) {
          throw UsageError("verify embedding needs --target and --tau");
        }
        LoadedTable const T = load(opt.target);
        for (auto const& t : tables) {
          Semigroup const S = t.semigroup;
          Morphism const  tau(T.semigroup.order(), to_elements(parse_index_list(opt.tau)));
          if (tau.source_order() != S.order()) {
            throw UsageError("--tau must list one image per element of " + t.path);
          }
          if (!tau.is_injective() || !is_homomorphism(tau, S, T.semigroup)) {
            throw UsageError("--tau is not an embedding of " + t.path + " into " + T.path);
          }
          for (auto const& P : sandwiches(S)) {
            Semigroup const target = T.semigroup;
            tasks.push_back(
                {t.path, [S, target, tau, P] { return verify_embedding(S, target, tau, P); }});
          }
        }
      } else {
        throw UsageError("unknown theorem '" + id
                         + "' (expected sequence, hereditary:<property>, equalizer, embedding)");
      }

      std::vector<std::function<Report()>> runs;
      for (auto const& t : tasks) {
        runs.push_back(t.run);
      }
      auto const reports = run_tasks(runs, jobs);

      Outcome o;
      o.inputs["theorem"] = id;
      o.inputs["files"]   = opt.files;
      if (id == "sequence") {
        o.inputs["depth"] = opt.depth;
      }
      if (!opt.sandwich.empty()) {
        o.inputs["sandwich"] = opt.sandwich;
      }
      if (id == "embedding") {
        o.inputs["target"] = opt.target;
        o.inputs["tau"]    = opt.tau;
      }
      o.inputs["seed"] = seed;

      json               list = json::array();
      std::ostringstream text;
      bool               ok = true;
      for (std::size_t k = 0; k < reports.size(); ++k) {
        Report const& r = reports[k];
        list.push_back(report_json(r, tasks[k].file));
        text << status_name(r.status()) << " " << r.theorem_id() << " " << tasks[k].file << " "
             << r.inputs_summary() << "\n";
        if (r.status() == Status::fail) {
          text << "  witness: " << *r.witness() << "\n";
          if (ok) {
            o.witness = tasks[k].file + ": " + *r.witness();
          }
          ok = false;
        }
      }
      o.status        = ok ? "PASS" : "FAIL";
      o.code          = ok ? success : failure;
      o.data["reports"] = list;
      text << o.status << "\n";
      o.text = text.str();
      return o;
    }

    Outcome cmd_enumerate(std::size_t order, std::string const& mode_text, std::string const& dump, bool order_five) {
      auto const mode = mode_from_name(mode_text);
      if (!mode) {
        throw UsageError("--mode must be labeled, iso or iso-anti");
      }
      auto const list = enumerate_semigroups(order, *mode, order_five);
      Outcome    o;
      o.inputs["order"] = order;
      o.inputs["mode"]  = mode_text;
      o.data["count"]   = list.size();
      o.text = "order " + std::to_string(order) + " " + mode_text + ": "
               + std::to_string(list.size()) + "\n";
      if (!dump.empty()) {
        o.inputs["dump"] = dump;
        std::filesystem::create_directories(dump);
        for (std::size_t k = 0; k < list.size(); ++k) {
          std::ostringstream name;
          name << "order" << order << "-" << mode_text << "-" << std::setw(4) << std::setfill('0')
               << k << ".sgp";
          write_table_file((std::filesystem::path(dump) / name.str()).string(),
                           list[k],
                           "order " + std::to_string(order) + " " + mode_text + " class "
                               + std::to_string(k));
        }
        o.text += "wrote " + std::to_string(list.size()) + " files to " + dump + "\n";
      }
      return o;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite semigroups, Rees matrix semigroups over them, and checks of their "
                 "structure theory",
                 "sgp"};
    app.require_subcommand(1);

    bool        as_json = false;
    std::size_t jobs    = 1;
    app.add_flag("--json", as_json, "Emit a machine-readable report");
    app.add_option("--jobs", jobs, "Worker threads for verification sweeps")
        ->check(CLI::PositiveNumber);

    std::string file, file2, property, base = "theta", spec = "theta", sandwich, out_path;
    std::string mode = "iso", dump;
    std::size_t depth = 2, order = 0;
    bool        order_five = false;
    VerifyOptions vopt;

    auto* validate = app.add_subcommand("validate", "Check that a table file is a semigroup");
    validate->add_option("file", file, "Table file")->required();

    auto* props = app.add_subcommand("props", "Evaluate structural properties");
    props->add_option("file", file, "Table file")->required();
    props->add_option("--property", property, "Single property to evaluate");

    auto* theta_cmd = app.add_subcommand("theta", "Print the congruence tower");
    theta_cmd->add_option("file", file, "Table file")->required();
    theta_cmd->add_option("--depth", depth, "Deepest level to print")->capture_default_str();
    theta_cmd->add_option("--base", base, "identity, universal, theta, theta:<k> or labels")
        ->capture_default_str();

    auto* quotient_cmd = app.add_subcommand("quotient", "Factor semigroup by a congruence");
    quotient_cmd->add_option("file", file, "Table file")->required();
    quotient_cmd->add_option("--congruence", spec, "identity, universal, theta, theta:<k> or labels")
        ->capture_default_str();
    quotient_cmd->add_option("--out", out_path, "Write the quotient table here");

    auto* rees_cmd = app.add_subcommand("rees", "Build M(S; Lambda; P)");
    rees_cmd->add_option("file", file, "Table file")->required();
    rees_cmd->add_option("--sandwich", sandwich, "Comma-separated P(0),P(1),...")->required();
    rees_cmd->add_option("--out", out_path, "Write the product table here");

    auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism");
    iso_cmd->add_option("left", file, "Table file")->required();
    iso_cmd->add_option("right", file2, "Table file")->required();

    auto* verify = app.add_subcommand("verify", "Verify a structural result on table files");
    verify->add_option("theorem", vopt.theorem, "sequence, hereditary:<property>, equalizer, embedding")
        ->required();
    verify->add_option("files", vopt.files, "Table files")->required();
    verify->add_option("--depth", vopt.depth, "Levels checked by sequence")->capture_default_str();
    verify->add_option("--sandwich", vopt.sandwich, "Fixed sandwich vector instead of a sweep");
    verify->add_option("--target", vopt.target, "Target semigroup T for embedding");
    verify->add_option("--tau", vopt.tau, "Images of the embedding S -> T");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate small semigroups");
    enumerate->add_option("--order", order, "Order n")->required();
    enumerate->add_option("--mode", mode, "labeled, iso or iso-anti")->capture_default_str();
    enumerate->add_option("--dump", dump, "Directory receiving one .sgp file per class");
    enumerate->add_flag("--allow-order-5", order_five, "Lift the order cap to 5");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
    }

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "sgp: " << e.what() << "\n";
      return usage_error;
    }

    std::string command;
    Outcome     o;
    try {
      if (*validate) {
        command = "validate";
        o       = cmd_validate(file);
      } else if (*props) {
        command = "props";
        o       = cmd_props(file, property);
      } else if (*theta_cmd) {
        command = "theta";
        o       = cmd_theta(file, depth, base);
      } else if (*quotient_cmd) {
        command = "quotient";
        o       = cmd_quotient(file, spec, out_path);
      } else if (*rees_cmd) {
        command = "rees";
        o       = cmd_rees(file, sandwich, out_path);
      } else if (*iso_cmd) {
        command = "iso";
        o       = cmd_iso(file, file2);
      } else if (*verify) {
        command = "verify";
        o       = cmd_verify(vopt, jobs);
      } else {
        command = "enumerate";
        o       = cmd_enumerate(order, mode, dump, order_five);
      }
    } catch (UsageError const& e) {
      err << "sgp " << command << ": " << e.what() << "\n";
      return usage_error;
    } catch (Error const& e) {
      err << "sgp " << command << ": " << e.what() << "\n";
      return usage_error;
    }

    if (as_json) {
      json j;
      j["command"] = command;
      j["inputs"]  = o.inputs;
      j["status"]  = o.status;
      j["data"]    = o.data;
      j["witness"] = o.witness ? json(*o.witness) : json(nullptr);
      out << j.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  }

}  // namespace sgp::cli
