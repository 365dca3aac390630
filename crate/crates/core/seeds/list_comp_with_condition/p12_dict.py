def last_items(values, n):
    if n >= len(values):
        return list(values)
    start = len(values) - n
    return values[start:]

def low_stock(stock, limit):
    low = []
    for item, qty in stock.items():
        if qty < limit:
            low.append(item)
    return low
# probe: low_stock({'pen': 2, 'ink': 9, 'cap': 0}, 3)
