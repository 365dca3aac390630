def describe_result(result):
    text = str(result)
    if len(text) > 40:
        text = text[:40] + '...'
    return 'result: ' + text
def net(transactions):
    total = 0
    for kind, amount in transactions:
        if kind == 'debit':
            total -= amount
        else:
            total += amount
    return total
