#include "umlsem/cli.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "umlsem/error.h"
#include "umlsem/frontend.h"
#include "umlsem/wellformed.h"

namespace umlsem::cli {

namespace {

using Json = nlohmann::ordered_json;

// File and parse problems; diagnostics are already collected.
struct InputError {};

struct Context {
  const RunConfig & config;
  std::vector<std::string> diagnostics;

  [[noreturn]] void input_error(std::string message)
  {
    diagnostics.push_back(std::move(message));
    throw InputError{};
  }
};

struct Report {
  Json json;
  std::string text;
  bool holds = false;
  // An ill-formed model is an input error even when reported as a verdict.
  bool input_error = false;
};

std::string read_file(Context & ctx, const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) ctx.input_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class T>
T take(Context & ctx, const std::string & path, Parsed<T> parsed)
{
  if (parsed.ok()) return std::move(*parsed.value);
  for (const SourceError & e : parsed.errors) {
    ctx.diagnostics.push_back(path + ":" + e.to_string());
  }
  throw InputError{};
}

StaticModel load_model(Context & ctx, const std::string & path, bool require_wf = true)
{
  StaticModel m = take(ctx, path, parse_model(read_file(ctx, path)));
  if (require_wf) {
    const WellFormednessReport report = well_formed(m);
    for (const WfViolation & v : report.violations) {
      ctx.diagnostics.push_back(path + ": " + std::string(wf_rule_name(v.rule)) +
                                ": " + v.message);
    }
    if (!report.ok()) throw InputError{};
  }
  return m;
}

Json scope_json(Scope s)
{
  return Json{{"objects", s.objects}, {"data", s.data}};
}

std::string scope_text(Scope s, Mode mode)
{
  return "objects=" + std::to_string(s.objects) + " data=" + std::to_string(s.data) +
         " mode=" + std::string(mode_name(mode));
}

std::string verdict_line(bool holds, Scope s, Mode mode)
{
  return std::string(holds ? "HOLDS AT SCOPE " : "FAILS AT SCOPE ") +
         scope_text(s, mode);
}

Json clause_json(const std::vector<ClauseViolation> & vs)
{
  Json out = Json::array();
  for (const ClauseViolation & v : vs) {
    out.push_back({{"clause", clause_name(v.clause)},
                   {"subject", v.subject},
                   {"message", v.message}});
  }
  return out;
}

std::string clause_text(const std::vector<ClauseViolation> & vs)
{
  std::string out;
  for (const ClauseViolation & v : vs) {
    out += "  " + std::string(clause_name(v.clause)) + " " + v.subject + ": " +
           v.message + "\n";
  }
  return out;
}

void header(Report & r, Command c, std::string_view verdict, bool holds)
{
  r.holds = holds;
  r.json["command"] = command_name(c);
  r.json["verdict"] = verdict;
  r.json["holds"] = holds;
}

// Verdict plus counterexample, shared by deduce, refine and verify-rule.
void describe_deduction(const DeductionVerdict & v, const StaticModel & conclusion,
                        Json & json, std::string & text)
{
  json["outcome"] = outcome_name(v.outcome);
  if (!v.counterexample) return;
  const std::string snap = print_snapshot(*v.counterexample);
  const auto violated = satisfies(conclusion, *v.counterexample, v.mode).violations;
  json["counterexample"] = snap;
  json["conclusion_violations"] = clause_json(violated);
  text += "counterexample:\n" + snap;
  text += "violates " + conclusion.name.str() + ":\n" + clause_text(violated);
}

Report do_check(Context & ctx)
{
  const std::string & path = ctx.config.inputs[0];
  const StaticModel m = load_model(ctx, path, false);
  const WellFormednessReport wf = well_formed(m);
  Report r;
  header(r, Command::kCheck, wf.ok() ? "WELL_FORMED" : "ILL_FORMED", wf.ok());
  r.json["model"] = m.name.str();
  Json vs = Json::array();
  r.text = wf.ok() ? "well-formed\n" : "ill-formed\n";
  for (const WfViolation & v : wf.violations) {
    vs.push_back({{"rule", wf_rule_name(v.rule)},
                  {"subject", v.subject},
                  {"message", v.message}});
    r.text += "  " + std::string(wf_rule_name(v.rule)) + ": " + v.message + "\n";
  }
  r.json["violations"] = vs;
  r.input_error = !wf.ok();
  return r;
}

Report do_enumerate(Context & ctx)
{
  const RunConfig & cfg = ctx.config;
  const StaticModel m = load_model(ctx, cfg.inputs[0]);
  const auto models = enumerate_models(m, cfg.scope, cfg.mode, cfg.enumeration);
  Report r;
  header(r, Command::kEnumerate, "ENUMERATED", true);
  r.json["model"] = m.name.str();
  r.json["scope"] = scope_json(cfg.scope);
  r.json["mode"] = mode_name(cfg.mode);
  r.json["count"] = models.size();
  Json snaps = Json::array();
  r.text = std::to_string(models.size()) + " models of " + m.name.str() +
           " at scope " + scope_text(cfg.scope, cfg.mode) + "\n";
  for (std::size_t i = 0; i < models.size(); ++i) {
    const std::string snap = print_snapshot(models[i]);
    snaps.push_back(snap);
    r.text += "// model " + std::to_string(i + 1) + "\n" + snap;
  }
  r.json["snapshots"] = snaps;
  return r;
}

Report do_satisfy(Context & ctx)
{
  const RunConfig & cfg = ctx.config;
  const StaticModel m = load_model(ctx, cfg.inputs[0]);
  const Snapshot s =
      take(ctx, cfg.inputs[1], parse_snapshot(read_file(ctx, cfg.inputs[1]), m));
  const SatisfactionVerdict v = satisfies(m, s, cfg.mode);
  Report r;
  header(r, Command::kSatisfy, v.satisfied() ? "SATISFIED" : "VIOLATED", v.satisfied());
  r.json["model"] = m.name.str();
  r.json["mode"] = mode_name(cfg.mode);
  r.json["violations"] = clause_json(v.violations);
  r.text = std::string(v.satisfied() ? "SATISFIED" : "VIOLATED") + " " +
           m.name.str() + " mode=" + std::string(mode_name(cfg.mode)) + "\n" +
           clause_text(v.violations);
  return r;
}

Report do_deduce(Context & ctx, Command c)
{
  const RunConfig & cfg = ctx.config;
  const StaticModel first = load_model(ctx, cfg.inputs[0]);
  const StaticModel second = load_model(ctx, cfg.inputs[1]);
  const DeductionVerdict v =
      c == Command::kRefine
          ? check_refinement(first, second, cfg.scope, cfg.mode, cfg.enumeration)
          : check_deduction(first, second, cfg.scope, cfg.mode, cfg.enumeration);
  Report r;
  header(r, c, outcome_name(v.outcome), v.holds());
  r.json[c == Command::kRefine ? "concrete" : "premise"] = first.name.str();
  r.json[c == Command::kRefine ? "abstract" : "conclusion"] = second.name.str();
  r.json["scope"] = scope_json(cfg.scope);
  r.json["mode"] = mode_name(cfg.mode);
  r.text = std::string(command_name(c)) + " " + first.name.str() +
           (c == Command::kRefine ? " refines " : " entails ") + second.name.str() +
           "\n" + verdict_line(v.holds(), cfg.scope, cfg.mode) + "\n";
  describe_deduction(v, second, r.json, r.text);
  return r;
}

Report do_prove(Context & ctx)
{
  const RunConfig & cfg = ctx.config;
  const StaticModel start = load_model(ctx, cfg.inputs[0]);
  const StaticModel goal = load_model(ctx, cfg.inputs[1]);
  const ProofScript script =
      take(ctx, cfg.inputs[2], parse_proof(read_file(ctx, cfg.inputs[2])));
  const ProofResult result =
      run_proof(script, start, goal, cfg.scope, cfg.mode, cfg.strategy, cfg.enumeration);

  Report r;
  header(r, Command::kProve, outcome_name(result.overall), result.holds());
  r.json["start"] = start.name.str();
  r.json["goal"] = goal.name.str();
  r.json["scope"] = scope_json(cfg.scope);
  r.json["mode"] = mode_name(cfg.mode);
  r.json["strategy"] = cfg.strategy == Strategy::kMeta ? "meta" : "bounded";
  Json steps = Json::array();
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const ProofStep & st = result.steps[i];
    Json js{{"index", i + 1},
            {"rule", print_rule(st.rule)},
            {"kind", rule_kind_name(kind_of(st.rule))},
            {"justification", justification_name(st.justification)},
            {"holds", st.verdict.holds()}};
    r.text += "step " + std::to_string(i + 1) + ": " + print_rule(st.rule) + " [" +
              std::string(justification_name(st.justification)) + "] " +
              (st.verdict.holds() ? "holds" : "FAILS") + "\n";
    std::string detail;
    describe_deduction(st.verdict, st.result, js, detail);
    r.text += detail;
    steps.push_back(std::move(js));
  }
  r.json["steps"] = steps;
  r.json["goal_matched"] = result.goal_matched;
  r.json["final_model"] = print_model(result.final_model);
  r.text += result.goal_matched ? "final model matches goal " + goal.name.str() + "\n"
                                : "final model differs from goal " + goal.name.str() +
                                      ":\n" + print_model(result.final_model);
  r.text += verdict_line(result.holds(), cfg.scope, cfg.mode) + "\n";
  return r;
}

Report do_verify_rule(Context & ctx)
{
  const RunConfig & cfg = ctx.config;
  StaticModel current = load_model(ctx, cfg.inputs[0]);
  const ProofScript script =
      take(ctx, cfg.inputs[1], parse_proof(read_file(ctx, cfg.inputs[1])));
  Report r;
  Json steps = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const Rule & rule = script.steps[i];
    StaticModel next;
    DeductionVerdict v;
    try {
      next = apply_rule(rule, current);
      v = check_deduction(current, next, cfg.scope, cfg.mode, cfg.enumeration);
    } catch (Error & e) {
      e.set_step(i);
      throw;
    }
    all = all && v.holds();
    Json js{{"index", i + 1},
            {"rule", print_rule(rule)},
            {"kind", rule_kind_name(kind_of(rule))},
            {"holds", v.holds()}};
    r.text += "step " + std::to_string(i + 1) + ": " + print_rule(rule) + ": " +
              verdict_line(v.holds(), cfg.scope, cfg.mode) + "\n";
    describe_deduction(v, next, js, r.text);
    steps.push_back(std::move(js));
    current = std::move(next);
  }
  header(r, Command::kVerifyRule, all ? "HOLDS_AT_SCOPE" : "FAILS", all);
  r.json["scope"] = scope_json(cfg.scope);
  r.json["mode"] = mode_name(cfg.mode);
  r.json["steps"] = steps;
  r.text += verdict_line(all, cfg.scope, cfg.mode) + "\n";
  return r;
}

Report do_apply(Context & ctx)
{
  const RunConfig & cfg = ctx.config;
  StaticModel current = load_model(ctx, cfg.inputs[0]);
  const ProofScript script =
      take(ctx, cfg.inputs[1], parse_proof(read_file(ctx, cfg.inputs[1])));
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      current = apply_rule(script.steps[i], current);
    } catch (Error & e) {
      e.set_step(i);
      throw;
    }
  }
  Report r;
  header(r, Command::kApply, "APPLIED", true);
  r.text = print_model(current);
  r.json["model"] = r.text;
  return r;
}

void emit_failure(const RunConfig & config, std::string_view verdict,
                  const std::vector<std::string> & diagnostics, std::ostream & out,
                  std::ostream & err)
{
  for (const auto & d : diagnostics) err << d << "\n";
  if (config.format != Format::kJson) return;
  Json j;
  j["command"] = command_name(config.command);
  j["verdict"] = verdict;
  j["holds"] = false;
  j["errors"] = diagnostics;
  out << j.dump(2) << "\n";
}

}  // namespace

std::optional<Command> parse_command(std::string_view word)
{
  for (Command c : {Command::kCheck, Command::kEnumerate, Command::kSatisfy,
                    Command::kDeduce, Command::kRefine, Command::kProve,
                    Command::kVerifyRule, Command::kApply}) {
    if (command_name(c) == word) return c;
  }
  return std::nullopt;
}

std::string_view command_name(Command c)
{
  switch (c) {
    case Command::kCheck: return "check";
    case Command::kEnumerate: return "enumerate";
    case Command::kSatisfy: return "satisfy";
    case Command::kDeduce: return "deduce";
    case Command::kRefine: return "refine";
    case Command::kProve: return "prove";
    case Command::kVerifyRule: return "verify-rule";
    case Command::kApply: return "apply";
  }
  return "?";
}

std::size_t command_arity(Command c)
{
  switch (c) {
    case Command::kCheck:
    case Command::kEnumerate: return 1;
    case Command::kProve: return 3;
    default: return 2;
  }
}

int run(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  Context ctx{config, {}};
  if (config.inputs.size() != command_arity(config.command)) {
    emit_failure(config, "INPUT_ERROR",
                 {std::string(command_name(config.command)) + " takes " +
                  std::to_string(command_arity(config.command)) + " input file(s), got " +
                  std::to_string(config.inputs.size())},
                 out, err);
    return kExitInputError;
  }
  try {
    Report r;
    switch (config.command) {
      case Command::kCheck: r = do_check(ctx); break;
      case Command::kEnumerate: r = do_enumerate(ctx); break;
      case Command::kSatisfy: r = do_satisfy(ctx); break;
      case Command::kDeduce:
      case Command::kRefine: r = do_deduce(ctx, config.command); break;
      case Command::kProve: r = do_prove(ctx); break;
      case Command::kVerifyRule: r = do_verify_rule(ctx); break;
      case Command::kApply: r = do_apply(ctx); break;
    }
    if (config.format == Format::kJson) {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    if (r.input_error) return kExitInputError;
    return r.holds ? kExitHolds : kExitFails;
  } catch (const InputError &) {
    emit_failure(config, "INPUT_ERROR", ctx.diagnostics, out, err);
    return kExitInputError;
  } catch (const Error & e) {
    std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
    if (e.step()) msg = "step " + std::to_string(*e.step() + 1) + ": " + msg;
    ctx.diagnostics.push_back(msg);
    const bool guard = e.code() == ErrorCode::kScopeTooLarge;
    emit_failure(config, guard ? "SCOPE_TOO_LARGE" : "INPUT_ERROR", ctx.diagnostics,
                 out, err);
    return guard ? kExitGuard : kExitInputError;
  }
}

}  // namespace umlsem::cli
