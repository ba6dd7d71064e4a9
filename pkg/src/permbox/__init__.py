"""
permbox — рабочий стенд для классов перестановок Av(4123,1324), Av(4123,1243), Av(4123,1342).

Слои:
- base — нейтральная инфраструктура (filestore, ioapi, runtime)
- common — утилиты без привязки к домену (точные степенные ряды)
- twobyfour — доменный слой: перестановки, каталог производящих функций,
  оракул перебора, равномерные сэмплеры, асимптотика и CLI
"""

__all__ = ["__version__"]

__version__ = "0.1.0"
