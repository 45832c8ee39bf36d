"""
Модули LapBound: комплексы, спектры, оценки, генераторы и прогоны
"""
