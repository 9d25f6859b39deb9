from pathlib import Path
from typing import Any

SKIPPED_DIRS = {"__pycache__", "data"}


class DocGenerator:
    """Writes one mkdocstrings page per pymlnet module plus a grouped index."""

    def __init__(self, package_name: str, source_dir: str, docs_dir: str = "docs"):
        self.package_name = package_name
        self.source_dir = Path(source_dir)
        self.docs_dir = Path(docs_dir)
        self.api_dir = self.docs_dir / "api-auto"
        self.api_dir.mkdir(parents=True, exist_ok=True)

    def discover_modules(self) -> list[Path]:
        modules = []
        for py_file in sorted(self.source_dir.rglob("*.py")):
            if SKIPPED_DIRS.intersection(py_file.relative_to(self.source_dir).parts):
                continue
            if py_file.name == "__init__.py":
                continue
            modules.append(py_file)
        return modules

    def get_module_info(self, module_path: Path) -> dict[str, Any]:
        relative = module_path.relative_to(self.source_dir).with_suffix("")
        module_name = ".".join(relative.parts)
        return {
            "subpackage": relative.parts[0] if len(relative.parts) > 1 else "",
            "name": module_name,
            "import_path": f"{self.package_name}.{module_name}",
            "doc_path": self.api_dir / f"{module_name}.md",
        }

    @staticmethod
    def generate_module_doc(module_info: dict[str, Any]) -> str:
        return "\n".join(
            [
                f"# {module_info['name']}",
                "",
                f"::: {module_info['import_path']}",
                "    options:",
                "      show_root_heading: false",
                "      heading_level: 2",
                "      show_source: true",
                "",
            ]
        )

    def generate_api_index(self, module_infos: list[dict[str, Any]]) -> str:
        content = ["# API Reference", "", f"Modules of the {self.package_name} package, by subpackage.", ""]

        by_subpackage: dict[str, list[dict[str, Any]]] = {}
        for info in module_infos:
            by_subpackage.setdefault(info["subpackage"] or self.package_name, []).append(info)

        for subpackage in sorted(by_subpackage):
            content.extend([f"## {subpackage}", ""])
            for info in by_subpackage[subpackage]:
                content.append(f"- [{info['name']}](api-auto/{info['name']}.md)")
            content.append("")
        return "\n".join(content)

    @staticmethod
    def write_file(filepath: Path, content: str) -> None:
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, "w", encoding="utf-8", newline="\n") as f:
            f.write(content)
        print(f"Generated {filepath}")

    def generate_all(self) -> None:
        module_infos = [self.get_module_info(m) for m in self.discover_modules()]
        print(f"Found {len(module_infos)} modules in {self.source_dir}")

        for info in module_infos:
            self.write_file(info["doc_path"], self.generate_module_doc(info))
        self.write_file(self.docs_dir / "api-auto.md", self.generate_api_index(module_infos))


if __name__ == "__main__":
    DocGenerator("pymlnet", "pymlnet").generate_all()
