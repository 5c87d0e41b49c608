# help mypy exclude this package
