"""
common — слой общих утилит, не привязанных к конкретному домену.

Сейчас здесь живёт точная арифметика рядов (common.series).
"""
