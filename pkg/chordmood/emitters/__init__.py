# emitters/__init__.py
from .grid_emitter import GridEmitter
from .csv_emitter import CSV_COLUMNS, CsvEmitter
from .pixmap_emitter import PixmapEmitter
