def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]
def low_stock(stock, limit):
    low = [item for item, qty in stock.items() if qty < limit]
    return low
