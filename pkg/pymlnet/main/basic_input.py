import logging
from typing import Any

from ..centrality.betweenness import CLASSIC_MODES
from ..mlnet.exceptions import OptionsError
from ..mlnet.model import DEFAULT_LAYER_CAP
from ..paths.pareto import DEFAULT_PATH_CAP
from ..utils import load_json_file

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")


class BasicInput:
    """Basic input.

    Options given explicitly take precedence over those read from ``options_file``;
    defaults fill the rest and are written back into ``options``.

    Args:
        options (dict[str, Any]): Options.

    Attributes:
        layer_cap (int): Maximum number of layers. Default is 16.
        path_cap (int): Maximum number of materialized efficient paths. Default is 10**6.
        seed (int): Louvain node-order seed. Default is 0.
        output_format (str): ``csv`` or ``json``. Default is ``csv``.
        max_workers (int): Thread-pool width of the analyses. Default is 1.
        classic_mode (str): ``fractional`` or ``count``. Default is ``fractional``.
        layer_codes (dict[str, str]): Explicit ``layer name -> code`` labels. Default is {}.
        decimals (int): Displayed rounding precision. Default is 2.

        options (dict[str, Any]): Options.
    """

    def __init__(self, options: dict[str, Any]) -> None:
        options_file = options.get("options_file") or ""
        try:
            file_options = load_json_file(options_file)
        except ValueError as e:
            raise OptionsError(str(e)) from e
        if file_options:
            logger.info("options read from %s: %s", options_file, ", ".join(sorted(file_options)))
        for key, value in file_options.items():
            options.setdefault(key, value)

        options["layer_cap"] = options.get("layer_cap", DEFAULT_LAYER_CAP)
        options["path_cap"] = options.get("path_cap", DEFAULT_PATH_CAP)
        options["seed"] = options.get("seed", 0)
        options["output_format"] = options.get("output_format", "csv")
        options["max_workers"] = options.get("max_workers", 1)
        options["classic_mode"] = options.get("classic_mode", "fractional")
        options["layer_codes"] = options.get("layer_codes", {})
        options["decimals"] = options.get("decimals", 2)
        self._check(options)

        self.layer_cap: int = options["layer_cap"]
        self.path_cap: int = options["path_cap"]
        self.seed: int = options["seed"]
        self.output_format: str = options["output_format"]
        self.max_workers: int = options["max_workers"]
        self.classic_mode: str = options["classic_mode"]
        self.layer_codes: dict[str, str] = options["layer_codes"]
        self.decimals: int = options["decimals"]

        self.options = options

    @staticmethod
    def _check(options: dict[str, Any]) -> None:
        """Raise ``OptionsError`` on the first invalid option."""

        def _int(key: str, minimum: int | None) -> None:
            value = options[key]
            if isinstance(value, bool) or not isinstance(value, int):
                raise OptionsError(f"option `{key}` must be an integer, got {value!r}")
            if minimum is not None and value < minimum:
                raise OptionsError(f"option `{key}` must be at least {minimum}, got {value}")

        _int("layer_cap", 1)
        _int("path_cap", 1)
        _int("seed", None)
        _int("max_workers", 1)
        _int("decimals", 0)

        if options["output_format"] not in OUTPUT_FORMATS:
            raise OptionsError(f"unknown output format `{options['output_format']}`; use one of {OUTPUT_FORMATS}")
        if options["classic_mode"] not in CLASSIC_MODES:
            raise OptionsError(f"unknown classic mode `{options['classic_mode']}`; use one of {CLASSIC_MODES}")

        codes = options["layer_codes"]
        if not isinstance(codes, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in codes.items()):
            raise OptionsError("option `layer_codes` must map layer names to strings")
        if any(not v for v in codes.values()):
            raise OptionsError("option `layer_codes` must not hold empty codes")
