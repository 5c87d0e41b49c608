# for mypy package recognize
