"""
twobyfour — доменный слой: классы Av(4123,1324), Av(4123,1243), Av(4123,1342).

Подпакеты:
- perm_core: перестановки, вхождение паттернов, разбиения
- gf_catalog: замкнутые формы производящих функций и тождества между ними
- enumeration_oracle: перебор как эталон
- class_sampler: точная равномерная генерация
- asymptotics: анализ особенностей
"""
