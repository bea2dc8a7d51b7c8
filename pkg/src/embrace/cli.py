"""``embrace`` command line: run tasks from a problem document.

Exit status: 0 when every task succeeds, 1 when a verification fails,
2 when the input cannot be used.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import documents, workbench
from .documents import InputError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

_TASK_FLAGS = ("degree", "deformation", "complex", "source", "target", "suite")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError("arguments", message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="problem document (JSON)")
    common.add_argument("--degree", type=int, help="Hochschild degree for hh")
    common.add_argument("--arity-max", type=int, default=4, help="arity bound for cochain searches")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--parallel", action="store_true", help="run independent tasks concurrently")
    common.add_argument("--deformation", help="deformation name")
    common.add_argument("--complex", help="complex name (default: all)")
    common.add_argument("--source", help="source deformation for gauge")
    common.add_argument("--target", help="target deformation for gauge")

    p = _Parser(prog="embrace", description="Hochschild, brace and deformation computations on finite quivers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "hh": "Hochschild cohomology dimension and representatives",
        "check": "validate the structure and the deformation cocycles",
        "embr": "transport the structure to complexes; curvature and characteristic values",
        "obstruct": "characteristic class and lift obstruction per complex",
        "lift": "first-order lift of a complex, checked in the deformed category",
        "gauge": "gauge isomorphism between two deformations",
        "verify": "run a named property suite",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, parents=[common], help=text, description=text)
        if name == "verify":
            sp.add_argument("suite", nargs="?", default=None,
                            help="brace, structure, embr, maintheorem, gauge, precomplexes, centrality or all")
    return p


def _tasks(args, prob):
    op = args.command
    explicit = {k: getattr(args, k, None) for k in _TASK_FLAGS}
    explicit = {k: v for k, v in explicit.items() if v is not None}
    if explicit:
        return [dict({"op": op}, **explicit)]
    if prob is not None:
        listed = [t for t in prob.tasks if t["op"] == op]
        if listed:
            return listed
    if prob is None:
        return [{"op": "verify", "suite": "all"}]
    return workbench.default_tasks(prob, op)


def _run_one(text, task, opts):
    """Worker entry point; re-parses the document so only plain data crosses processes."""
    prob = documents.loads(text, check=task["op"] != "check") if text is not None else None
    return workbench.run_task(prob, task, opts)


def _describe(task):
    return " ".join("%s=%s" % (k, task[k]) for k in sorted(task) if k != "op")


def render(results, tasks, fmt):
    out = []
    if fmt == "records":
        for k, (task, res) in enumerate(zip(tasks, results)):
            for rec in res.records:
                out.append(json.dumps(dict(rec, task=k), sort_keys=True, separators=(",", ":")))
        out.append(json.dumps({"summary": {"tasks": len(results), "failed": [k for k, r in enumerate(results)
                                                                              if not r.ok]}},
                              sort_keys=True, separators=(",", ":")))
    else:
        for k, (task, res) in enumerate(zip(tasks, results)):
            out.append("== task %d: %s %s" % (k, task["op"], _describe(task)))
            out.extend(res.lines)
        bad = [k for k, r in enumerate(results) if not r.ok]
        out.append("summary: %d task(s), %s" % (len(results), "all passed" if not bad
                                                  else "FAILED %s" % ", ".join(map(str, bad))))
    return "\n".join(out) + "\n"


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        text = None
        prob = None
        if args.input is not None:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(args.input, exc.strerror or str(exc)) from None
            prob = documents.loads(text, check=args.command != "check")
        elif args.command != "verify":
            raise InputError("--input", "%s needs a problem document" % args.command)
        tasks = _tasks(args, prob)
        opts = workbench.Options(seed=args.seed, arity_max=args.arity_max)
        if args.parallel and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=min(len(tasks), os.cpu_count() or 1)) as pool:
                futures = [pool.submit(_run_one, text, t, opts) for t in tasks]
                results = [f.result() for f in futures]
        else:
            results = [workbench.run_task(prob, t, opts) for t in tasks]
    except InputError as exc:
        print("input error: %s" % exc, file=stderr)
        return EXIT_INPUT
    except (ValueError, KeyError) as exc:
        print("input error: %s" % exc, file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT
    stdout.write(render(results, tasks, args.format))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
