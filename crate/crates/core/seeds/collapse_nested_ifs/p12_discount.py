def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def price(amount, member, coupon):
    cost = amount
    if member:
        if coupon == 'HALF':
            cost = amount // 2
    if cost > 100:
        cost = cost - 5
    return cost
# probe: price(300, True, 'HALF')
# probe: price(300, False, 'HALF')
# probe: price(80, True, 'NONE')
