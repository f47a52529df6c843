from tqdm import tqdm
from typing import Callable, List, Sequence, TypeVar
from chordmood.utils.logs import logger

T = TypeVar("T")
R = TypeVar("R")


def apply_in_order(
    items: Sequence[T],
    func: Callable[[T], R],
    desc: str = "Processing..",
    show_progress: bool = False,
    start_idx: int = 0,
) -> List[R]:
    """
    Apply a function to each item of a sequence, starting from a specified index, and
    collect the results in input order.

    Parameters:
        items (Sequence): The items to process.
        func (callable): The function to apply to each item. It takes a single item and
                         returns a single result.
        desc (str, optional): Label for the progress bar.
        show_progress (bool, optional): Show a tqdm progress bar on stderr. Default is False.
        start_idx (int, optional): The index from which to start applying the function. Default is 0.

    Returns:
        List: One result per processed item, in the same order as ``items[start_idx:]``.

    Raises:
        ValueError: If start_idx is out of bounds.
    """
    if start_idx < 0 or (items and start_idx >= len(items)):
        raise ValueError(
            f"start_idx ({start_idx}) is outside the item range (0..{len(items) - 1})."
        )

    results: List[R] = []
    idx = start_idx
    try:
        for idx, item in enumerate(
            tqdm(items[start_idx:], desc=desc, unit="item", disable=not show_progress),
            start=start_idx,
        ):
            results.append(func(item))
    except Exception as e:
        logger.error(f"Error occurred at index {idx}: {str(e)}")
        raise

    return results
