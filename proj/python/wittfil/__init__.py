"""Thin Python front end over the C++ core; every call returns the CLI's JSON as a dict."""

import json

from . import _core

__all__ = ["WittfilError", "run", "level", "swan", "symbol", "modulus", "verify", "suite_names"]


class WittfilError(RuntimeError):
    def __init__(self, exit_code, message):
        super().__init__(message)
        self.exit_code = exit_code


def run(command, *args, raise_on_error=True, **flags):
    req = {"command": command, "args": [str(a) for a in args]}
    for k, v in flags.items():
        req[k.replace("_", "-")] = v
    code, body = _core.run_json(json.dumps(req))
    out = json.loads(body)
    if raise_on_error and code not in (0, 4):
        raise WittfilError(code, out.get("error", ""))
    return out


def level(phi, field="F2((t))", n=None):
    return run("level", phi, field=field, **({"n": n} if n else {}))


def swan(phi, field="F2((t))", n=1):
    return run("swan", phi, field=field, n=n)


def symbol(f, g, field="F2((t))", n=1, group=None):
    return run("symbol", f, g, field=field, n=n, **({"group": group} if group else {}))


def modulus(phi, group="Ga", field="F2(x)"):
    return run("modulus", field=field, group=group, phi=phi)


def verify(name, seed=1, trials=0):
    return run("verify", name, seed=seed, trials=trials)


def suite_names():
    return list(_core.suite_names())
