"""サブコマンド（各モジュールが ``NAME``・``add_parser``・``run`` を公開）"""

from app.commands import (
    analyze,
    compose,
    conditions,
    extend,
    fishburn,
    isomorphic,
    maximal_domains,
    scan,
    shuffles,
    single_peaked,
)

COMMANDS = (
    fishburn,
    analyze,
    compose,
    shuffles,
    extend,
    isomorphic,
    scan,
    single_peaked,
    maximal_domains,
    conditions,
)
