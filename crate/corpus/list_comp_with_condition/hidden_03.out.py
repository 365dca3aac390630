def partition(values, pivot):
    low = [v for v in values if v < pivot]
    high = [v for v in values if v >= pivot]
    return low, high
