def split_even_odd(values):
    evens = []
    odds = []
    for v in values:
        if not v % 2 == 0:
            odds.append(v)
        else:
            evens.append(v)
    return evens, odds
# probe: split_even_odd([1, 2, 3, 4, 5])
