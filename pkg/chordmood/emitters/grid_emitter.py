# emitters/grid_emitter.py
from abc import ABC, abstractmethod
from chordmood.grid.triad_grid import TriadGrid


class GridEmitter(ABC):
    """
    Serializes an analyzed triad grid to bytes.
    """

    @abstractmethod
    def emit(self, grid: TriadGrid) -> bytes:
        """
        Renders the grid.

        Parameters:
        grid (TriadGrid): The grid produced by generate_grid.

        Returns:
        bytes: The serialized grid.
        """
        pass
