"""Content-addressed results cache for expensive computations.

A cache entry is keyed by the SHA-256 of (input file bytes, operation name,
canonical parameter JSON, engine version).  The entry directory stores the
payload, the input bytes (so `cache verify` can recompute without the
original paths), and a small metadata record.  Writes go through a lock file
plus atomic rename, so concurrent invocations are safe; eviction is manual.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time

from . import __version__

ENV_VAR = "MODSKEIN_CACHE_DIR"


def default_cache_dir() -> str:
    env = os.environ.get(ENV_VAR)
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME",
                          os.path.join(os.path.expanduser("~"), ".cache"))
    return os.path.join(base, "modskein")


def cache_key(input_bytes: bytes, op: str, params: dict) -> str:
    h = hashlib.sha256()
    h.update(input_bytes)
    h.update(b"\x00")
    h.update(op.encode("utf-8"))
    h.update(b"\x00")
    h.update(json.dumps(params, sort_keys=True,
                        separators=(",", ":")).encode("utf-8"))
    h.update(b"\x00")
    h.update(__version__.encode("utf-8"))
    return h.hexdigest()


def _entry_dir(cache_dir: str, key: str) -> str:
    return os.path.join(cache_dir, key[:2], key)


class _Lock:
    def __init__(self, cache_dir: str, timeout: float = 30.0):
        self.path = os.path.join(cache_dir, ".lock")
        self.timeout = timeout
        self._fd = None

    def __enter__(self):
        deadline = time.time() + self.timeout
        os.makedirs(os.path.dirname(self.path), exist_ok=True)
        while True:
            try:
                self._fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
                return self
            except FileExistsError:
                if time.time() > deadline:
                    raise TimeoutError("cache lock at %s is stuck" % self.path)
                time.sleep(0.05)

    def __exit__(self, *exc):
        if self._fd is not None:
            os.close(self._fd)
        try:
            os.unlink(self.path)
        except FileNotFoundError:
            pass


def lookup(cache_dir: str, key: str) -> bytes | None:
    path = os.path.join(_entry_dir(cache_dir, key), "payload")
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except FileNotFoundError:
        return None


def store(cache_dir: str, key: str, payload: bytes, op: str, params: dict,
          input_bytes: bytes) -> None:
    entry = _entry_dir(cache_dir, key)
    meta = {
        "key": key,
        "op": op,
        "params": params,
        "engine_version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "input_sha256": hashlib.sha256(input_bytes).hexdigest(),
    }
    with _Lock(cache_dir):
        os.makedirs(entry, exist_ok=True)
        for name, data in (("payload", payload),
                           ("input", input_bytes),
                           ("meta.json", (json.dumps(meta, indent=1) + "\n")
                            .encode("utf-8"))):
            fd, tmp = tempfile.mkstemp(dir=entry)
            try:
                with os.fdopen(fd, "wb") as fh:
                    fh.write(data)
                os.replace(tmp, os.path.join(entry, name))
            except BaseException:
                try:
                    os.unlink(tmp)
                except FileNotFoundError:
                    pass
                raise


def entries(cache_dir: str):
    """Yield (key, entry_dir) for every stored entry."""
    if not os.path.isdir(cache_dir):
        return
    for shard in sorted(os.listdir(cache_dir)):
        shard_path = os.path.join(cache_dir, shard)
        if len(shard) != 2 or not os.path.isdir(shard_path):
            continue
        for key in sorted(os.listdir(shard_path)):
            yield key, os.path.join(shard_path, key)


def verify_all(cache_dir: str, recompute) -> list[dict]:
    """Recompute every entry from its stored input and compare payloads.

    `recompute(op, params, input_bytes) -> bytes`; returns a report list with
    one record per entry.
    """
    report = []
    for key, entry in entries(cache_dir):
        with open(os.path.join(entry, "meta.json"), "r", encoding="utf-8") as fh:
            meta = json.load(fh)
        with open(os.path.join(entry, "payload"), "rb") as fh:
            payload = fh.read()
        with open(os.path.join(entry, "input"), "rb") as fh:
            input_bytes = fh.read()
        if meta.get("engine_version") != __version__:
            report.append({"key": key, "status": "skipped",
                           "reason": "engine version %s"
                           % meta.get("engine_version")})
            continue
        fresh = recompute(meta["op"], meta["params"], input_bytes)
        report.append({"key": key,
                       "op": meta["op"],
                       "status": "ok" if fresh == payload else "MISMATCH"})
    return report
