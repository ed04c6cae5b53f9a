"""TinyDB cache of structure constants and invariant generators, keyed by (type, form)."""
import json
import os
from typing import List, Optional, Sequence

from tinydb import Query, TinyDB

import configuration
from errors import CliffhcError, GeneratorError
from lie_core import LieAlgebra, build_algebra, check_supported, from_json, normalize_form_choice, to_json
from logger_config import get_logger
from symmetric import invariant_generators, poly_from_json, poly_to_json, seed_generators, symmetric_ring

logger = get_logger('cache')

ALGEBRAS = "algebras"
GENERATORS = "generators"
DEFAULT_BUILD = ("A1", "A2", "B2", "C2", "A1xA1")


class Cache:
    def __init__(self, cacheDir: Optional[str] = None):
        self.cacheDir = cacheDir or configuration.cacheDir
        self.path = os.path.join(self.cacheDir, configuration.dbName)

    def _open(self) -> TinyDB:
        os.makedirs(self.cacheDir, exist_ok=True)
        if os.path.exists(self.path):
            try:
                with open(self.path) as f:
                    text = f.read()
                if text.strip():
                    json.loads(text)
            except ValueError:
                logger.warning(f"Cache file {self.path} is corrupt, starting a new one")
                os.remove(self.path)
        return TinyDB(self.path, sort_keys=True)

    def _get(self, table: str, key: str, form: str) -> Optional[dict]:
        db = self._open()
        entry = Query()
        found = db.table(table).search((entry.type == key) & (entry.form == form))
        db.close()
        return found[0] if found else None

    def _put(self, table: str, key: str, form: str, document: dict):
        db = self._open()
        entry = Query()
        db.table(table).upsert({"type": key, "form": form, **document}, (entry.type == key) & (entry.form == form))
        db.close()

    def algebra(self, cartan_type, form_choice: str) -> LieAlgebra:
        """The cached algebra, or a fresh build stored for next time."""
        key = str(check_supported(cartan_type))
        form = normalize_form_choice(form_choice)
        found = self._get(ALGEBRAS, key, form)
        if found is not None:
            try:
                g = from_json(found["json"])
                logger.debug(f"Cache hit for {key} ({form})")
                return g
            except (CliffhcError, KeyError) as e:
                logger.warning(f"Cache entry for {key} ({form}) is corrupt, rebuilding: {e}")
        logger.debug(f"Cache miss for {key} ({form})")
        g = build_algebra(key, form)
        self._put(ALGEBRAS, key, form, {"json": to_json(g)})
        return g

    def generators(self, g: LieAlgebra) -> list:
        """Invariant generators of g, installed from the cache when present."""
        key, form = str(g.cartanType), g.formChoice
        found = self._get(GENERATORS, key, form)
        if found is not None:
            try:
                ring = symmetric_ring(g)
                seed_generators(g, [poly_from_json(ring, data) for data in found["generators"]])
                logger.debug(f"Generators of {key} ({form}) loaded from the cache")
            except (GeneratorError, KeyError, ValueError, TypeError) as e:
                logger.warning(f"Cached generators of {key} ({form}) rejected, recomputing: {e}")
        gens = invariant_generators(g)
        if found is None or found.get("generators") != [poly_to_json(f) for f in gens]:
            self._put(GENERATORS, key, form, {"generators": [poly_to_json(f) for f in gens]})
        return gens

    def build(self, types: Sequence[str] = DEFAULT_BUILD, forms: Sequence[str] = ("trace", "killing")) -> List[dict]:
        """Build fresh entries and compare them byte for byte with what was stored."""
        results = []
        for cartan_type in types:
            key = str(check_supported(cartan_type))
            for form_choice in forms:
                form = normalize_form_choice(form_choice)
                g = build_algebra(key, form)
                fresh = to_json(g)
                stored = self._get(ALGEBRAS, key, form)
                identical = stored is not None and stored.get("json") == fresh
                if stored is not None and not identical:
                    logger.warning(f"Cache entry for {key} ({form}) differed from a fresh build, rewritten")
                self._put(ALGEBRAS, key, form, {"json": fresh})
                gens = [poly_to_json(f) for f in invariant_generators(g)]
                self._put(GENERATORS, key, form, {"generators": gens})
                results.append({"type": key, "form": form, "identical": identical, "bytes": len(fresh)})
        return results

    def entries(self) -> List[dict]:
        db = self._open()
        out = []
        for table in (ALGEBRAS, GENERATORS):
            for document in db.table(table).all():
                out.append({"table": table, "type": document.get("type"), "form": document.get("form")})
        db.close()
        return sorted(out, key=lambda e: (e["table"], str(e["type"]), str(e["form"])))

    def clear(self) -> int:
        db = self._open()
        count = sum(len(db.table(t)) for t in (ALGEBRAS, GENERATORS))
        db.drop_tables()
        db.close()
        logger.debug(f"Cleared {count} cache entries from {self.path}")
        return count
