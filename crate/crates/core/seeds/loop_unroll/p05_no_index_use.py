def percent_of(part, whole):
    if whole == 0:
        return '0%'
    share = part * 100 // whole
    return str(share) + '%'

def triple_append(items, value):
    for _ in range(3):
        items.append(value)
    return items
# probe: triple_append([], 'x')
