from pathlib import Path


class FileUtils:

    @staticmethod
    def get_file_path(relative_path: str) -> str:
        """Resolve a path relative to the repository root."""
        return (Path(__file__).resolve().parents[2] / relative_path).as_posix()

    @staticmethod
    def resolve_input_path(path: str) -> str:
        """Resolve a user-supplied path: absolute, cwd-relative, then root-relative."""
        candidate = Path(path).expanduser()
        if candidate.is_absolute() or candidate.exists():
            return candidate.resolve().as_posix()
        return FileUtils.get_file_path(path)

    @staticmethod
    def ensure_parent_dir(path: str) -> Path:
        target = Path(path).expanduser()
        target.parent.mkdir(parents=True, exist_ok=True)
        return target
