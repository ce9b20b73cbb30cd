import os
import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

# Relative imports for the installed package, absolute ones for local execution
try:
    from .debug_utils import Debug
    from .errors import InputError, InvalidWord
except ImportError:
    from debug_utils import Debug
    from errors import InputError, InvalidWord


def json_number(x):
    """Render exact numbers for JSON: ints stay ints, fractions become strings."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def json_vector(v: Sequence) -> list:
    return [json_number(x) for x in v]


def parse_coords(text: str, length: Optional[int] = None) -> tuple:
    """Parse ``"1,0,-2"`` (or ``"1/2,0"``) into a tuple of exact numbers.

    Raises:
        InputError: malformed entries or wrong length.
    """
    if text is None:
        raise InputError("missing coordinates")
    parts = [p.strip() for p in str(text).replace(";", ",").split(",") if p.strip()]
    try:
        values = []
        for p in parts:
            frac = Fraction(p)
            values.append(int(frac) if frac.denominator == 1 else frac)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coordinates '{text}': {exc}") from exc
    if length is not None and len(values) != length:
        raise InputError(f"coordinates '{text}' have length {len(values)}, expected {length}")
    return tuple(values)


def parse_word(text: str, size: int) -> tuple:
    """Parse a comma separated word of 0-based reflection indices."""
    if text is None or not str(text).strip():
        return ()
    try:
        word = tuple(int(p) for p in str(text).split(",") if p.strip())
    except ValueError as exc:
        raise InvalidWord(f"bad word '{text}': {exc}") from exc
    for i in word:
        if not 0 <= i < size:
            raise InvalidWord(f"reflection index {i} outside 0..{size - 1}")
    return word


class OutputManager:
    """Render result documents as JSON or CSV and optionally store them."""

    FORMATS = ("json", "csv")

    def __init__(self, fmt: str = "json", out_file: Optional[Union[Path, str]] = None) -> None:
        if fmt not in self.FORMATS:
            raise InputError(f"unknown output format '{fmt}'")
        self.fmt = fmt
        self.out_file = Path(out_file) if out_file else None

    @staticmethod
    def create_metadata(title: str, creator: str, description: str = "", extra: Union[dict, None] = None) -> dict:
        """Create metadata dictionary following basic Dublin Core fields."""
        metadata = {
            "dc:title": title,
            "dc:creator": creator,
            "dc:description": description,
        }
        if extra:
            metadata.update(extra)
        return metadata

    def render(self, metadata: dict, rows: list, columns: Sequence[str], body: Optional[dict] = None) -> str:
        """Render one result.

        ``rows`` are dictionaries keyed by ``columns``; JSON output nests them
        under ``"rows"`` next to the metadata header and the optional ``body``.
        """
        if self.fmt == "json":
            doc = {"header": metadata}
            if body:
                doc.update(body)
            doc["rows"] = rows
            return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for key, value in metadata.items():
            writer.writerow([f"# {key}", json.dumps(value, ensure_ascii=False)])
        if body:
            for key, value in body.items():
                writer.writerow([f"# {key}", json.dumps(value, ensure_ascii=False)])
        writer.writerow(list(columns))
        for row in rows:
            writer.writerow([self._cell(row.get(c)) for c in columns])
        return buffer.getvalue()

    @staticmethod
    def _cell(value) -> str:
        if isinstance(value, (list, tuple, dict)):
            return json.dumps(value)
        if value is None:
            return ""
        return str(value)

    def save(self, text: str) -> Optional[Path]:
        """Write ``text`` to ``out_file`` if one was requested."""
        if self.out_file is None:
            return None
        self.out_file.parent.mkdir(parents=True, exist_ok=True)
        try:
            with open(self.out_file, "w", newline="", encoding="utf-8") as f:
                f.write(text)
            Debug.info(f"Saved result to {self.out_file}")
        except OSError as exc:
            Debug.error(f"Failed to save result: {exc}", exc_info=exc)
            raise InputError(f"cannot write {self.out_file}: {exc}") from exc
        return self.out_file


def import_config(profile: str = "default") -> dict:
    """
    Imports the configuration profile from config.json.
    Args:
        profile (str): The profile to load (default is "default").
    Returns:
        dict: The configuration dictionary, empty if nothing could be loaded.
    """
    config_locations = []
    env_path = os.environ.get("KM_SATAKE_CONFIG")
    if env_path:
        config_locations.append(Path(env_path))
    config_locations += [
        # Current working directory (for running from source)
        Path("config.json"),
        # Package directory (when installed)
        Path(__file__).parent / "config.json",
        # One level up (root directory when running from source)
        Path(__file__).parent.parent / "config.json",
    ]

    config_path = None
    for location in config_locations:
        if location.exists():
            config_path = location
            break

    if config_path is None:
        Debug.error(
            "config.json not found. Please ensure it exists in the project root or package directory."
        )
        return {}

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = json.load(f)
            return config[profile]
    except json.JSONDecodeError as e:
        Debug.error(f"Error decoding JSON from config.json: {e}")
        return {}
    except KeyError:
        Debug.error(f"Profile '{profile}' not found in config.json")
        return {}


def config_value(config: dict, *keys, default=None):
    """Nested lookup with a default, for partially filled configurations."""
    node = config
    for key in keys:
        if not isinstance(node, dict) or key not in node:
            return default
        node = node[key]
    return node
