def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text

def net(transactions):
    total = 0
    for kind, amount in transactions:
        if not kind == 'debit':
            total += amount
        else:
            total -= amount
    return total
# probe: net([('credit', 10), ('debit', 3), ('credit', 5)])
