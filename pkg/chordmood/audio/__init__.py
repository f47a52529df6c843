from .synth import RenderSpec, matched_pair, render_chord
from .wav import FULL_SCALE, quantize, write_wav
from .spectrum import probe_magnitude, to_decibels
