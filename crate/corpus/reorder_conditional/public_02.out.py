def split_even_odd(values):
    evens = []
    odds = []
    for v in values:
        if v % 2 == 0:
            evens.append(v)
        else:
            odds.append(v)
    return evens, odds
